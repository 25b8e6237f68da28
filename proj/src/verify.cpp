#include "chio/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chio/census_oracle.hpp"
#include "chio/failure_enum.hpp"
#include "chio/measures.hpp"
#include "chio/switching.hpp"

namespace chio {

namespace {

CheckResult result(std::string name, bool pass, std::string detail) {
    return {"", std::move(name), pass, std::move(detail)};
}

std::string nstr(int n) { return "n=" + std::to_string(n); }

// Base-3 digits of code over `cells` positions, 0 -> 0, 1 -> +1, 2 -> -1.
std::vector<int> ternary_values(int cells, std::uint64_t code) {
    std::vector<int> v(cells);
    for (int p = 0; p < cells; ++p, code /= 3) v[p] = code % 3 == 0 ? 0 : (code % 3 == 1 ? 1 : -1);
    return v;
}

std::vector<Index2> positions_of_mask(int n, std::uint32_t mask) {
    std::vector<Index2> pos;
    const int cells = (n - 1) * (n - 1);
    for (int p = 0; p < cells; ++p)
        if ((mask >> p) & 1U) pos.push_back({p / (n - 1) + 1, p % (n - 1) + 1});
    return pos;
}

// Calls fn for every partial B on [n-1]^2 with dom(B) <= k_max.
template <class Fn>
void for_each_partial(int n, int k_max, Fn fn) {
    const int cells = (n - 1) * (n - 1);
    for (int k = 0; k <= std::min(k_max, cells); ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<Index2> pos;
            for (int c : comb) pos.push_back({c / (n - 1) + 1, c % (n - 1) + 1});
            const IndexSet dom(n, n, pos);
            const std::uint64_t total = pow3(k);
            for (std::uint64_t code = 0; code < total; ++code) fn(PartialTernaryMatrix(dom, ternary_values(k, code)));
            int i = k - 1;
            while (i >= 0 && comb[i] == cells - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
}

std::string big(const BigInt& v) { return v.str(); }

}  // namespace

CheckResult check_chio_identity(int n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    std::uint64_t bad = 0, condense_bad = 0;
    const int m = n - 1;
    std::vector<long long> a(static_cast<std::size_t>(n) * n), c(static_cast<std::size_t>(m) * m);
    for (std::uint64_t code = 0; code < total; ++code) {
        for (int b = 0; b < n * n; ++b) a[b] = ((code >> b) & 1U) ? 1 : -1;
        const long long pivot = a[n * n - 1];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c[i * m + j] = a[i * n + j] * pivot - a[i * n + m] * a[m * n + j];
        const long long lhs = det_small(c, m);
        long long rhs = det_small(a, n);
        for (int e = 0; e < n - 2; ++e) rhs *= pivot;
        if (lhs != rhs) ++bad;
        const PartialTernaryMatrix half = chio_condense(SignMatrix::from_code(n, n, code));
        for (int p = 0; p < m * m; ++p)
            if (2 * half.values()[p] != c[p]) ++condense_bad;
    }
    return result("chio identity " + nstr(n), bad == 0 && condense_bad == 0,
                  std::to_string(total) + " matrices, " + std::to_string(bad) + " determinant mismatches, " +
                      std::to_string(condense_bad) + " entry mismatches");
}

CheckResult check_rank_drop(int n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    std::uint64_t bad = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        const PartialTernaryMatrix b = chio_condense(SignMatrix::from_code(n, n, code));
        std::vector<long long> bv(b.values().begin(), b.values().end());
        if (rank_small(bv, n - 1, n - 1) != rank_of_code(n, n, code) - 1) ++bad;
    }
    return result("rank drop " + nstr(n), bad == 0,
                  std::to_string(total) + " matrices, " + std::to_string(bad) + " violations");
}

CheckResult check_fibres(int n, unsigned workers) {
    const EmpiricalChio e = empirical_p_chio(n, workers);
    const FibreCheck fc = check_fibres(e);
    std::uint64_t sum = 0;
    for (auto c : e.counts) sum += c;
    const bool ok = fc.ok() && sum == (std::uint64_t{1} << (n * n));
    return result("fibre cardinality " + nstr(n), ok,
                  std::to_string(fc.condensates) + " condensates, " + std::to_string(fc.positive) + " nonempty fibres, " +
                      std::to_string(fc.mismatches) + " mismatches, " + std::to_string(fc.unbalanced_hits) +
                      " unbalanced hits");
}

CheckResult check_averaging(int n) {
    const EmpiricalChio e = empirical_p_chio(n, 1);
    const int cells = (n - 1) * (n - 1);
    // Marginal count of every partial B, keyed by (domain mask, values code).
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> marg;
    for (std::uint64_t code = 0; code < e.counts.size(); ++code) {
        if (e.counts[code] == 0) continue;
        const std::vector<int> full = ternary_values(cells, code);
        for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
            std::uint64_t key = 0;
            for (int p = cells - 1; p >= 0; --p)
                if ((mask >> p) & 1U) key = key * 3 + static_cast<std::uint64_t>(full[p] == 0 ? 0 : (full[p] == 1 ? 1 : 2));
            marg[{mask, key}] += e.counts[code];
        }
    }
    auto count_of = [&](std::uint32_t mask, const std::vector<int>& vals) {
        std::uint64_t key = 0;
        for (int q = static_cast<int>(vals.size()) - 1; q >= 0; --q)
            key = key * 3 + static_cast<std::uint64_t>(vals[q] == 0 ? 0 : (vals[q] == 1 ? 1 : 2));
        auto it = marg.find({mask, key});
        return it == marg.end() ? std::uint64_t{0} : it->second;
    };
    std::uint64_t events = 0, avg_bad = 0, abs_bad = 0;
    for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
        const int k = std::popcount(mask);
        const IndexSet dom(n, n, positions_of_mask(n, mask));
        for (std::uint64_t code = 0; code < pow3(k); ++code) {
            const std::vector<int> vals = ternary_values(k, code);
            const PartialTernaryMatrix b(dom, vals);
            ++events;
            std::vector<int> nz;
            for (int q = 0; q < k; ++q)
                if (vals[q] != 0) nz.push_back(q);
            std::uint64_t signed_sum = 0;
            for (std::uint32_t sig = 0; sig < (1U << nz.size()); ++sig) {
                std::vector<int> v = vals;
                for (std::size_t r = 0; r < nz.size(); ++r) v[nz[r]] = ((sig >> r) & 1U) ? -1 : 1;
                signed_sum += count_of(mask, v);
            }
            // averaged measure: 2^-supp * sum / 2^{n^2} must equal 2^-(dom+supp)
            const std::uint64_t lcf_total = std::uint64_t{1} << (n * n - k);
            if (signed_sum != lcf_total || !(p_chio_averaged(b) == p_lcf(b))) ++avg_bad;
            bool binary = true;
            for (int v : vals) binary = binary && v >= 0;
            if (binary && (signed_sum != lcf_total || !(p_chio_abs(b) == DyadicProb::pow_half(k)))) ++abs_bad;
        }
    }
    return result("averaged and sign-forgotten measures " + nstr(n), avg_bad == 0 && abs_bad == 0,
                  std::to_string(events) + " events, " + std::to_string(avg_bad) + " averaging mismatches, " +
                      std::to_string(abs_bad) + " uniformity mismatches");
}

CheckResult check_recipe(int n, int k_max) {
    std::uint64_t events = 0, bad = 0;
    for_each_partial(n, k_max, [&](const PartialTernaryMatrix& b) {
        ++events;
        if (!(recipe_p_chio(b) == p_chio(b))) ++bad;
    });
    return result("recipe vs graph evaluation " + nstr(n) + " dom<=" + std::to_string(k_max), bad == 0,
                  std::to_string(events) + " events, " + std::to_string(bad) + " mismatches");
}

CheckResult check_worst_ratio(int n) {
    const int cells = (n - 1) * (n - 1);
    int best = -1;
    std::uint64_t attained = 0, attained_non_complete = 0;
    const auto k = canonical_form(complete_bipartite(n - 1, n - 1));
    for (std::uint64_t code = 0; code < pow3(cells); ++code) {
        const PartialTernaryMatrix b(IndexSet::inner(n, n), ternary_values(cells, code));
        const Ratio r = ratio_chio_lcf(b);
        if (r.zero) continue;
        if (r.log2 > best) {
            best = r.log2;
            attained = 0;
            attained_non_complete = 0;
        }
        if (r.log2 == best) {
            ++attained;
            const SmallGraph g = build_graph(b).underlying();
            if (g.n != 2 * (n - 1) || canonical_form(g) != k) ++attained_non_complete;
        }
    }
    const bool ok = best == (n - 2) * (n - 2) && attained_non_complete == 0;
    return result("worst-case ratio " + nstr(n), ok,
                  "max log2 ratio " + std::to_string(best) + ", attained by " + std::to_string(attained) +
                      " condensates, " + std::to_string(attained_non_complete) + " not complete bipartite");
}

CheckResult check_kwise(int n, unsigned workers) {
    const KwiseReport rep = kwise_agreement_check(empirical_p_chio(n, workers), 6);
    std::ostringstream d;
    d << "disagreements by dom:";
    for (std::size_t k = 0; k < rep.disagreements.size(); ++k) d << ' ' << rep.disagreements[k];
    std::uint64_t mism = 0;
    bool sets = true;
    for (std::size_t k = 0; k < rep.events.size(); ++k) {
        mism += rep.chio_mismatch[k];
        sets = sets && rep.matches_enumeration[k];
    }
    d << "; " << mism << " p_chio mismatches; disagreement sets " << (sets ? "match" : "differ from") << " enumeration";
    return result("k-wise agreement " + nstr(n), rep.ok(), d.str());
}

CheckResult check_failure_counts(int k, int n, unsigned workers) {
    const CountReport got = count_failures(k, n, workers);
    const CountReport want = failure_count_formula(k, n);
    std::vector<std::string> diff;
    if (got.total_events != want.total_events) diff.push_back("total");
    if (got.failures != want.failures) diff.push_back("failures");
    if (got.ratio_zero != want.ratio_zero) diff.push_back("ratio0");
    if (got.ratio_pow != want.ratio_pow) diff.push_back("ratio splits");
    if (n >= 3 && got.by_value != want.by_value) diff.push_back("value splits");
    std::string detail = "k=" + std::to_string(k) + " " + nstr(n) + ": failures " + big(got.failures) + ", F0 " +
                         big(got.ratio_zero) + ", F2 " + big(got.ratio_count(1)) + ", F4 " + big(got.ratio_count(2));
    for (const auto& [e, c] : got.by_value) detail += ", v" + std::to_string(e) + " " + big(c);
    if (!diff.empty()) {
        detail += "; differs in";
        for (const auto& s : diff) detail += " " + s;
    }
    return result("failure counts k=" + std::to_string(k) + " " + nstr(n), diff.empty(), detail);
}

CheckResult check_realizations(int k, int n, unsigned workers) {
    const CountReport got = count_failures(k, n, workers);
    const CountReport want = failure_count_formula(k, n);
    std::vector<std::string> diff;
    for (int t = 0; t < kIsoTypeCount; ++t) {
        const IsoType type = static_cast<IsoType>(t);
        if (got.by_isotype[t] != want.by_isotype[t]) diff.push_back(to_string(type));
        if (t >= 1 && t <= 20 && got.by_isotype[t] != 0 &&
            got.balanced_by_isotype[t] != (got.by_isotype[t] >> catalogue_beta1(type)))
            diff.push_back(to_string(type) + "(balanced)");
    }
    std::string detail = std::to_string(listed_types(k).size()) + " listed types";
    if (!diff.empty()) {
        detail += "; differs at";
        for (const auto& s : diff) detail += " " + s;
    }
    return result("realization table k=" + std::to_string(k) + " " + nstr(n), diff.empty(), detail);
}

CheckResult check_relations_numeric(int n, unsigned workers) {
    const auto rel = linear_relations(count_failures(5, n, workers), count_failures(6, n, workers));
    std::string detail;
    bool ok = true;
    for (const auto& r : rel) {
        ok = ok && r.holds();
        detail += (detail.empty() ? "" : ", ") + r.name + " " + big(r.lhs) + (r.holds() ? "=" : "!=") + big(r.rhs);
    }
    return result("linear relations from enumeration " + nstr(n), ok, detail);
}

CheckResult check_relations_symbolic(int n_lo, int n_hi) {
    int bad = 0;
    for (int n = n_lo; n <= n_hi; ++n)
        for (const auto& r : linear_relations_formula(n))
            if (!r.holds()) ++bad;
    return result("linear relations from closed forms n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi), bad == 0,
                  std::to_string(bad) + " failures over " + std::to_string(5 * (n_hi - n_lo + 1)) + " evaluations");
}

CheckResult check_h_identity(int n) {
    const HCounts h = h_counts(n);
    const CountReport f = failure_count_formula(6, n);
    const bool poly = h.c4_not_k23 == h.c4_not_k23_poly;
    const bool sum = h.c6 + h.k23 + h.c4_not_k23 == f.failures;
    const bool tables = h.c6 == f.by_isotype[12] && h.k23 == f.by_isotype[4];
    return result("h-count identity " + nstr(n), poly && sum && tables,
                  "h_C6 " + big(h.c6) + ", h_K23 " + big(h.k23) + ", h_C4notK23 " + big(h.c4_not_k23) + ", total " +
                      big(f.failures));
}

CheckResult check_seventeen_sum(int n) {
    const CountReport f = failure_count_formula(6, n);
    BigInt sum = 0;
    for (int t = 2; t <= 20; ++t)
        if (t != 4 && t != 12) sum += f.by_isotype[t];
    const HCounts h = h_counts(n);
    return result("seventeen-type sum " + nstr(n), sum == h.c4_not_k23,
                  "sum over t2..t20 without t4,t12 " + big(sum) + ", h_C4notK23 " + big(h.c4_not_k23));
}

CheckResult check_rank_census(int s, int t, unsigned workers) {
    const RankCensus rc = rank_census(s, t, workers);
    std::ostringstream d;
    d << rc.visited << " matrices; by rank:";
    for (auto c : rc.rank_sign) d << ' ' << c;
    d << "; binary by rank:";
    for (auto c : rc.rank_binary) d << ' ' << c;
    d << "; drop violations " << rc.rank_drop_violations;
    const bool ok = rc.lemma_holds() && rc.uniform_after_forgetting();
    return result("rank census " + std::to_string(s) + "x" + std::to_string(t), ok, d.str());
}

CheckResult check_singular(int n, unsigned workers) {
    const SingularReport sr = singular_count(n, workers);
    std::uint64_t brute = 0;
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<long long> a(static_cast<std::size_t>(n) * n);
        for (int b = 0; b < n * n; ++b) a[b] = ((code >> b) & 1U) ? 1 : -1;
        if (det_small(a, n) == 0) ++brute;
    }
    const bool ok = sr.prop_identity && brute == sr.singular_sign;
    return result("singular count " + nstr(n), ok,
                  "singular sign matrices " + std::to_string(sr.singular_sign) + ", singular binary " +
                      std::to_string(sr.singular_binary) + ", weighted ternary sum " + big(sr.q4_right_numerator) +
                      "/2^" + std::to_string(sr.q4_right_denominator_exp));
}

CheckResult check_switch_group_laws(std::uint64_t seed) {
    const int s = 4, t = 4, cells = 9;
    std::mt19937_64 rng(seed);
    std::vector<PartialTernaryMatrix> samples;
    for (int r = 0; r < 4; ++r)
        samples.emplace_back(IndexSet::inner(s, t), ternary_values(cells, rng() % pow3(cells)));
    const std::uint64_t order = SwitchElement::group_order(s, t);
    std::uint64_t bad = 0;
    for (const auto& b : samples) {
        if (!(switch_matrix(b, SwitchElement::identity(s, t)) == b)) ++bad;
        for (std::uint64_t gi = 0; gi < order; ++gi) {
            const SwitchElement g = SwitchElement::from_index(s, t, gi);
            const PartialTernaryMatrix bg = switch_matrix(b, g);
            if (bg.support() != b.support()) ++bad;
            for (std::uint64_t hi = 0; hi < order; ++hi) {
                const SwitchElement h = SwitchElement::from_index(s, t, hi);
                if (!(switch_matrix(bg, h) == switch_matrix(b, g + h))) ++bad;
            }
        }
    }
    const PartialTernaryMatrix ones(IndexSet::inner(s, t), std::vector<int>(cells, 1));
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t gi = 0; gi < order; ++gi)
        if (switch_matrix(ones, SwitchElement::from_index(s, t, gi)) == ones) kernel.push_back(gi);
    const bool kernel_ok = kernel.size() == 2 && kernel[0] == 0 &&
                           SwitchElement::from_index(s, t, kernel[1]) == SwitchElement::all_ones(s, t);
    return result("switching group laws", bad == 0 && kernel_ok,
                  std::to_string(bad) + " law violations, kernel size " + std::to_string(kernel.size()));
}

CheckResult check_switch_compatibility(int n) {
    const int cells = (n - 1) * (n - 1);
    const std::uint64_t order = SwitchElement::group_order(n, n);
    std::uint64_t bad = 0, cases = 0;
    for (std::uint64_t code = 0; code < pow3(cells); ++code) {
        const PartialTernaryMatrix b(IndexSet::inner(n, n), ternary_values(cells, code));
        const SignedBipartiteGraph x = build_graph(b);
        const bool bal = is_balanced(x).balanced;
        for (std::uint64_t gi = 0; gi < order; ++gi) {
            ++cases;
            const SwitchElement g = SwitchElement::from_index(n, n, gi);
            const SignedBipartiteGraph y = build_graph(switch_matrix(b, g));
            if (y.underlying().edges != x.underlying().edges || signing_of(y) != switch_signing(x, signing_of(x), g))
                ++bad;
            if (is_balanced(y).balanced != bal) ++bad;
        }
    }
    return result("switching compatibility " + nstr(n), bad == 0,
                  std::to_string(cases) + " (matrix, element) pairs, " + std::to_string(bad) + " violations");
}

namespace {

// Connected labelled bipartite graphs on a rows and b columns using every
// vertex, as all-(+) patterns inside an (a+1)x(b+1) frame.
std::vector<SignedBipartiteGraph> connected_bipartite_graphs(int max_edges) {
    std::vector<SignedBipartiteGraph> out;
    for (int a = 1; a <= max_edges; ++a) {
        for (int b = 1; a + b - 1 <= max_edges; ++b) {
            const int m = a * b;
            for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
                const int e = std::popcount(mask);
                if (e < a + b - 1 || e > max_edges) continue;
                std::vector<int> parent(a + b);
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](int v) {
                    while (parent[v] != v) v = parent[v] = parent[parent[v]];
                    return v;
                };
                std::vector<Index2> pos;
                int comps = a + b;
                for (int p = 0; p < m; ++p) {
                    if (!((mask >> p) & 1U)) continue;
                    pos.push_back({p / b + 1, p % b + 1});
                    const int u = find(p / b), v = find(a + p % b);
                    if (u != v) parent[u] = v, --comps;
                }
                if (comps != 1) continue;
                out.push_back(build_graph(PartialTernaryMatrix(IndexSet(a + 1, b + 1, pos), std::vector<int>(e, 1))));
            }
        }
    }
    return out;
}

}  // namespace

CheckResult check_transitivity(int max_edges) {
    std::uint64_t graphs = 0, bad = 0;
    for (const auto& x : connected_bipartite_graphs(max_edges)) {
        ++graphs;
        const std::set<Signing> bal = balanced_signings(x);
        const BettiData bd = betti(x);
        if (bal.size() != (std::size_t{1} << (bd.f0 - bd.beta0))) ++bad;
        const std::size_t m = x.edges.size();
        for (std::uint32_t code = 0; code < (1U << m); ++code) {
            Signing sigma(m);
            for (std::size_t q = 0; q < m; ++q) sigma[q] = ((code >> q) & 1U) ? -1 : 1;
            const std::set<Signing> orb = orbit(x, sigma);
            if (bal.count(sigma)) {
                if (orb != bal) ++bad;
            } else {
                for (const auto& s : orb)
                    if (bal.count(s)) {
                        ++bad;
                        break;
                    }
            }
        }
    }
    return result("switching transitivity, <=" + std::to_string(max_edges) + " edges", bad == 0,
                  std::to_string(graphs) + " connected graphs, " + std::to_string(bad) + " violations");
}

CheckResult check_rigidity(int max_edges) {
    std::uint64_t graphs = 0, bad = 0;
    for (const auto& x : connected_bipartite_graphs(max_edges)) {
        ++graphs;
        const std::set<Signing> bal = balanced_signings(x);
        const std::vector<int> tree = spanning_forest(x);
        std::vector<int> rest;
        for (int e = 0; e < static_cast<int>(x.edges.size()); ++e)
            if (std::find(tree.begin(), tree.end(), e) == tree.end()) rest.push_back(e);
        std::vector<int> reversed(rest.rbegin(), rest.rend());
        std::set<Signing> built;
        for (std::uint32_t code = 0; code < (1U << tree.size()); ++code) {
            Signing ts(tree.size());
            for (std::size_t q = 0; q < tree.size(); ++q) ts[q] = ((code >> q) & 1U) ? -1 : 1;
            const Signing ext = balanced_extension(x, tree, ts);
            if (ext != balanced_extension(x, tree, ts, reversed)) ++bad;
            for (std::size_t q = 0; q < tree.size(); ++q)
                if (ext[tree[q]] != ts[q]) ++bad;
            built.insert(ext);
        }
        if (built != bal || built.size() != (std::size_t{1} << tree.size())) ++bad;
    }
    return result("rigid balanced extension, <=" + std::to_string(max_edges) + " edges", bad == 0,
                  std::to_string(graphs) + " connected graphs, " + std::to_string(bad) + " violations");
}

CheckResult check_rank_invariance(int max_dim) {
    std::uint64_t patterns = 0, signings = 0, bad = 0;
    int ones_unbalanced = -1;
    for (int r = 1; r <= max_dim; ++r) {
        for (int c = 1; c <= max_dim; ++c) {
            const int cells = r * c;
            for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
                std::vector<int> vals(cells);
                for (int p = 0; p < cells; ++p) vals[p] = (mask >> p) & 1U;
                const RankInvarianceReport rep = rank_invariance_check(PartialTernaryMatrix(IndexSet::inner(r + 1, c + 1), vals));
                ++patterns;
                signings += rep.balanced;
                if (!rep.ok()) ++bad;
                if (r == max_dim && c == max_dim && mask + 1 == (1U << cells)) ones_unbalanced = rep.max_unbalanced_rank;
            }
        }
    }
    return result("rank invariance of balanced signings, grids up to " + std::to_string(max_dim) + "x" +
                      std::to_string(max_dim),
                  bad == 0,
                  std::to_string(patterns) + " patterns, " + std::to_string(signings) + " balanced signings, " +
                      std::to_string(bad) + " violations; all-ones unbalanced max rank " + std::to_string(ones_unbalanced));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"chio-identity", "measures", "failures", "census", "switching", "relations"};
    return names;
}

namespace {

std::vector<CheckResult> run_one(const std::string& suite, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    const int n = o.n;
    const int top = std::min(n, 4);
    const unsigned w = o.workers;
    if (suite == "chio-identity") {
        for (int m = 2; m <= top; ++m) out.push_back(check_chio_identity(m));
        for (int m = 2; m <= top; ++m) out.push_back(check_rank_drop(m));
    } else if (suite == "measures") {
        for (int m = 3; m <= top; ++m) out.push_back(check_fibres(m, w));
        if (o.big) out.push_back(check_fibres(5, w));
        out.push_back(check_averaging(3));
        for (int m = 3; m <= top; ++m) out.push_back(check_kwise(m, w));
        for (int m = 3; m <= top; ++m) out.push_back(check_worst_ratio(m));
        out.push_back(check_recipe(std::max(3, top), 6));
        if (o.big) out.push_back(check_recipe(5, 6));
    } else if (suite == "failures") {
        const int hi = o.big ? std::max(n, 5) : n;
        for (int m = 3; m <= hi; ++m)
            for (int k = 4; k <= 6 && k <= (m - 1) * (m - 1); ++k) {
                out.push_back(check_failure_counts(k, m, w));
                out.push_back(check_realizations(k, m, w));
            }
    } else if (suite == "census") {
        for (int m = 3; m <= top; ++m) out.push_back(check_rank_census(m, m, w));
        for (int m = 2; m <= top; ++m) out.push_back(check_singular(m, w));
        if (o.big) {
            out.push_back(check_rank_census(5, 5, w));
            out.push_back(check_singular(5, w));
        }
    } else if (suite == "switching") {
        out.push_back(check_switch_group_laws(o.seed));
        out.push_back(check_switch_compatibility(3));
        out.push_back(check_transitivity(6));
        out.push_back(check_rigidity(6));
        out.push_back(check_rank_invariance(3));
    } else if (suite == "relations") {
        out.push_back(check_relations_symbolic(3, 40));
        if (n >= 4) out.push_back(check_relations_numeric(4, w));
        if (o.big) out.push_back(check_relations_numeric(5, w));
        for (int m = 4; m <= 8; ++m) out.push_back(check_h_identity(m));
        for (int m = 4; m <= 8; ++m) out.push_back(check_seventeen_sum(m));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    for (auto& r : out) r.suite = suite;
    return out;
}

}  // namespace

std::vector<CheckResult> run_verify(const std::vector<std::string>& suites, const VerifyOptions& opts) {
    if (opts.n < 2 || opts.n > 6) throw std::invalid_argument("verify supports 2 <= n <= 6");
    std::vector<std::string> names;
    for (const auto& s : suites) {
        if (s == "all") names.insert(names.end(), suite_names().begin(), suite_names().end());
        else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) names.push_back(s);
        else throw std::invalid_argument("unknown suite: " + s);
    }
    std::vector<CheckResult> out;
    for (const auto& s : names) {
        auto part = run_one(s, opts);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results)
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "  " << r.name << "  " << r.detail << '\n';
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace chio
