#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "chio/census_oracle.hpp"
#include "chio/failure_enum.hpp"
#include "chio/measures.hpp"
#include "chio/serialize.hpp"
#include "chio/switching.hpp"
#include "chio/verify.hpp"

using namespace chio;

namespace {

struct Options {
    int n = 0;
    int s = 0;
    int t = 0;
    int k = 0;
    std::string matrix;
    std::string out;
    std::string format = "json";
    std::string checkpoint;
    bool formula_only = false;
    bool big = false;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::vector<std::string> suites;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Re-embeds b into an n x n frame when --n is given.
PartialTernaryMatrix ternary_input(const Options& o) {
    if (o.matrix.empty()) throw UsageError("--matrix is required");
    PartialTernaryMatrix b = parse_ternary(o.matrix);
    if (o.n == 0 || o.n == b.s()) return b;
    if (b.s() != b.t() || o.n < b.s()) throw UsageError("--n does not fit the matrix shape");
    std::vector<int> vals(b.values().begin(), b.values().end());
    return PartialTernaryMatrix(IndexSet(o.n, o.n, b.positions()), vals);
}

int emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open " + o.out);
    f << text;
    return 0;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

int cmd_condense(const Options& o) {
    if (o.matrix.empty()) throw UsageError("--matrix is required");
    const SignMatrix a = parse_sign_matrix(o.matrix);
    if (!a.is_full()) throw UsageError("condense needs a fully specified sign matrix");
    const PartialTernaryMatrix b = chio_condense(a);
    const IntMatrix c = chio_condensate_int(a);
    const IntMatrix ai = IntMatrix::from(a);
    Json j = {{"A", to_json(a)},
              {"condensate", to_json(b)},
              {"rank_A", rank_int(ai)},
              {"rank_condensate", rank_int(IntMatrix::from(b))}};
    if (a.s() == a.t()) {
        j["det_A"] = to_json(det_int(ai));
        j["det_C"] = to_json(det_int(c));
    }
    return emit(o, dump(j));
}

int cmd_pchio(const Options& o) {
    const PartialTernaryMatrix b = ternary_input(o);
    const ChioProfile prof = chio_profile(b);
    Json j = event_report(Event(b, IndexSet::inner(b.s(), b.t())));
    j["dom"] = b.dom();
    j["supp"] = b.supp();
    j["f0"] = prof.betti.f0;
    j["beta0"] = prof.betti.beta0;
    j["beta1"] = prof.betti.beta1;
    j["balanced"] = prof.balanced;
    j["fibre_cardinality"] = to_json(fibre_cardinality(Event::full(b)));
    return emit(o, dump(j));
}

int cmd_recipe(const Options& o) {
    const PartialTernaryMatrix b = ternary_input(o);
    const DyadicProb r = recipe_p_chio(b), g = p_chio(b);
    const Json j = {{"B", to_json(b)}, {"recipe", to_json(r)}, {"p_chio", to_json(g)}, {"agree", r == g}};
    emit(o, dump(j));
    return r == g ? 0 : 1;
}

int cmd_classify(const Options& o) {
    const PartialTernaryMatrix b = ternary_input(o);
    const SignedBipartiteGraph x = build_graph(b);
    const BettiData bd = betti(x);
    const Json j = {{"graph", to_json(x)},
                    {"f0", bd.f0},
                    {"f1", bd.f1},
                    {"beta0", bd.beta0},
                    {"beta1", bd.beta1},
                    {"balanced", is_balanced(x).balanced},
                    {"colorings", count_colorings(x)},
                    {"balanced_signings", count_balanced_signings(x)},
                    {"isotype", to_string(classify_isotype(x))}};
    return emit(o, dump(j));
}

int cmd_failures(const Options& o) {
    if (o.k == 0 || o.n == 0) throw UsageError("failures needs --k and --n");
    CountReport rep;
    bool ok = true;
    if (o.formula_only) {
        rep = failure_count_formula(o.k, o.n);
    } else {
        rep = count_failures(o.k, o.n, o.workers);
        if (o.k >= 4 && o.n >= 3) {
            CountReport want = failure_count_formula(o.k, o.n);
            want.balanced_by_isotype = rep.balanced_by_isotype;
            ok = rep == want;
        }
    }
    if (o.format == "csv") emit(o, csv_header() + "\n" + csv_row(rep) + "\n");
    else {
        Json j = to_json(rep);
        if (!o.formula_only && o.k >= 4 && o.n >= 3) j["matches_closed_forms"] = ok;
        emit(o, dump(j));
    }
    return ok ? 0 : 1;
}

int cmd_formulas(const Options& o) {
    if (o.n < 3) throw UsageError("formulas needs --n >= 3");
    Json j = {{"n", o.n}, {"xi", to_json(xi(o.n))}, {"failures", Json::array()}};
    for (int k = 4; k <= 6; ++k) j["failures"].push_back(to_json(failure_count_formula(k, o.n)));
    const HCounts h = h_counts(o.n);
    j["h"] = {{"C6", to_json(h.c6)}, {"K23", to_json(h.k23)}, {"C4notK23", to_json(h.c4_not_k23)}, {"geq", to_json(h.geq)}};
    bool ok = h.c4_not_k23 == h.c4_not_k23_poly;
    j["relations"] = Json::object();
    for (const auto& r : linear_relations_formula(o.n)) {
        j["relations"][r.name] = {to_json(r.lhs), to_json(r.rhs)};
        ok = ok && r.holds();
    }
    if (o.k > 0) j["density_bound"] = {{"k", o.k}, {"count", to_json(failure_density_bound(o.k, o.n))}};
    emit(o, dump(j));
    return ok ? 0 : 1;
}

int cmd_census(const Options& o) {
    if (o.n < 2) throw UsageError("census needs --n");
    if (o.n >= 5 && !o.big) throw UsageError("census at n >= 5 needs --big");
    const EmpiricalChio e = empirical_p_chio(o.n, o.workers);
    const FibreCheck fc = check_fibres(e);
    if (o.format == "csv") {
        emit(o, "n,condensates,nonempty,mismatches,unbalanced_hits\n" + std::to_string(o.n) + "," +
                    std::to_string(fc.condensates) + "," + std::to_string(fc.positive) + "," +
                    std::to_string(fc.mismatches) + "," + std::to_string(fc.unbalanced_hits) + "\n");
    } else {
        emit(o, dump({{"n", o.n},
                      {"condensates", fc.condensates},
                      {"nonempty", fc.positive},
                      {"mismatches", fc.mismatches},
                      {"unbalanced_hits", fc.unbalanced_hits}}));
    }
    return fc.ok() ? 0 : 1;
}

int cmd_ranks(const Options& o) {
    const int s = o.s ? o.s : o.n, t = o.t ? o.t : o.n;
    if (s < 2 || t < 2) throw UsageError("ranks needs --n or --s/--t");
    if (s * t > 16 && !o.big) throw UsageError("rank census beyond 2^16 matrices needs --big");
    const RankCensus rc = rank_census(s, t, o.workers, o.checkpoint);
    Json j = to_json(rc);
    bool ok = rc.lemma_holds() && rc.uniform_after_forgetting();
    if (s == t && s <= 5) {
        const SingularReport sr = singular_count(s, o.workers);
        j["singular"] = {{"sign", sr.singular_sign},
                         {"binary", sr.singular_binary},
                         {"weighted_ternary_numerator", to_json(sr.q4_right_numerator)},
                         {"weighted_ternary_denominator_log2", sr.q4_right_denominator_exp},
                         {"identity", sr.prop_identity}};
        ok = ok && sr.prop_identity;
    }
    emit(o, dump(j));
    return ok ? 0 : 1;
}

int cmd_switch_orbit(const Options& o) {
    const PartialTernaryMatrix b = ternary_input(o);
    const SignedBipartiteGraph x = build_graph(b);
    const auto orb = orbit(x, signing_of(x));
    const auto bal = balanced_signings(x);
    std::size_t balanced_in_orbit = 0;
    for (const auto& s : orb) balanced_in_orbit += bal.count(s);
    const BettiData bd = betti(x);
    Json j = {{"graph", to_json(x)},
              {"balanced", is_balanced(x).balanced},
              {"orbit_size", orb.size()},
              {"balanced_signings", bal.size()},
              {"expected_balanced", std::uint64_t{1} << (bd.f0 - bd.beta0)},
              {"balanced_in_orbit", balanced_in_orbit},
              {"orbit", Json::array()}};
    for (const auto& s : orb) j["orbit"].push_back(s);
    const bool ok = is_balanced(x).balanced ? (orb == bal) : balanced_in_orbit == 0;
    emit(o, dump(j));
    return ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
    VerifyOptions v;
    v.n = o.n ? o.n : 4;
    v.big = o.big;
    v.workers = o.workers;
    v.seed = o.seed;
    const auto results = run_verify(o.suites.empty() ? std::vector<std::string>{"all"} : o.suites, v);
    emit(o, format_results(results));
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chio condensation measures, failure sets and censuses"};
    Options o;
    app.require_subcommand(1);
    app.add_option("--n", o.n, "matrix size");
    app.add_option("--s", o.s, "rows");
    app.add_option("--t", o.t, "columns");
    app.add_option("--k", o.k, "number of specified entries");
    app.add_option("--matrix", o.matrix, "JSON matrix or '+-0' rows");
    app.add_option("--out", o.out, "write output here instead of stdout");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--checkpoint", o.checkpoint, "rank census checkpoint file");
    app.add_flag("--formula-only", o.formula_only, "skip enumeration");
    app.add_flag("--big", o.big, "allow n = 5 censuses");
    app.add_option("--seed", o.seed, "seed for sampled checks");
    app.add_option("--workers", o.workers, "worker threads (default CHIO_WORKERS or all cores)");
    app.add_option("--suite", o.suites, "verify suites (repeatable; default all)");
    app.fallthrough();

    using Handler = int (*)(const Options&);
    const std::vector<std::pair<std::string, Handler>> commands{
        {"condense", cmd_condense},   {"pchio", cmd_pchio},     {"recipe", cmd_recipe},
        {"classify", cmd_classify},   {"failures", cmd_failures}, {"formulas", cmd_formulas},
        {"census", cmd_census},       {"ranks", cmd_ranks},     {"switch-orbit", cmd_switch_orbit},
        {"verify", cmd_verify}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, h] : commands) subs.push_back(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        for (std::size_t i = 0; i < commands.size(); ++i)
            if (subs[i]->parsed()) return commands[i].second(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
