#include "chio/failure_enum.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace chio {

unsigned default_workers() {
    if (const char* env = std::getenv("CHIO_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return static_cast<unsigned>(w);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

BigInt CountReport::ratio_count(int log2) const {
    auto it = ratio_pow.find(log2);
    return it == ratio_pow.end() ? BigInt(0) : it->second;
}

BigInt CountReport::value_count(int e) const {
    auto it = by_value.find(e);
    return it == by_value.end() ? BigInt(0) : it->second;
}

namespace {

std::uint64_t choose_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// r-th k-subset of {0..m-1} in lexicographic order.
std::vector<int> unrank_combination(int m, int k, std::uint64_t r) {
    std::vector<int> c;
    int x = 0;
    for (int slot = 0; slot < k; ++slot) {
        while (true) {
            std::uint64_t block = choose_u64(m - x - 1, k - slot - 1);
            if (r < block) break;
            r -= block;
            ++x;
        }
        c.push_back(x++);
    }
    return c;
}

bool next_combination(std::vector<int>& c, int m) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

void check_args(int k, int n) {
    if (k < 0 || k > 6) throw std::invalid_argument("failure enumeration supports 0 <= k <= 6");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (k > (n - 1) * (n - 1)) throw std::invalid_argument("k exceeds the number of positions");
}

// Vertex bookkeeping for one index set.
struct IndexContext {
    int k = 0;
    int f0 = 0;
    std::array<int, 6> u{};  // row vertex of position q
    std::array<int, 6> v{};  // column vertex of position q
    std::array<Index2, 6> pos{};

    IndexContext(const std::vector<int>& comb, int n) : k(static_cast<int>(comb.size())) {
        std::array<int, 16> row_id{}, col_id{};
        row_id.fill(-1);
        col_id.fill(-1);
        for (int q = 0; q < k; ++q) pos[q] = {comb[q] / (n - 1) + 1, comb[q] % (n - 1) + 1};
        int next = 0;
        std::vector<int> rows, cols;
        for (int q = 0; q < k; ++q) rows.push_back(pos[q].row), cols.push_back(pos[q].col);
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (int r : rows) row_id[r] = next++;
        for (int c : cols) col_id[c] = next++;
        f0 = next;
        for (int q = 0; q < k; ++q) {
            u[q] = row_id[pos[q].row];
            v[q] = col_id[pos[q].col];
        }
    }
};

struct SupportInfo {
    int beta0 = 0;
    int beta1 = 0;
    IsoType type = IsoType::Forest;
};

SupportInfo support_info(const IndexContext& ctx, unsigned mask) {
    std::array<int, 12> parent{};
    for (int i = 0; i < ctx.f0; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (int q = 0; q < ctx.k; ++q) {
        if (!((mask >> q) & 1U)) continue;
        int a = find(ctx.u[q]), b = find(ctx.v[q]);
        if (a != b) {
            parent[a] = b;
            ++merges;
        }
    }
    SupportInfo info;
    info.beta0 = ctx.f0 - merges;
    info.beta1 = std::popcount(mask) - merges;
    if (info.beta1 >= 1) {
        SmallGraph g{ctx.f0, {}};
        for (int q = 0; q < ctx.k; ++q)
            if ((mask >> q) & 1U) g.edges.emplace_back(ctx.u[q], ctx.v[q]);
        info.type = classify_isotype(g);
    }
    return info;
}

// Parity union-find: a (+)-edge asks for different colours, a (-)-edge for
// equal colours. plus_mask marks the (+)-edges inside mask.
bool signing_balanced(const IndexContext& ctx, unsigned mask, unsigned plus_mask) {
    std::array<int, 12> parent{}, parity{};
    for (int i = 0; i < ctx.f0; ++i) parent[i] = i, parity[i] = 0;
    auto find = [&](int x, int& par) {
        par = 0;
        while (parent[x] != x) {
            par ^= parity[x];
            x = parent[x];
        }
        return x;
    };
    for (int q = 0; q < ctx.k; ++q) {
        if (!((mask >> q) & 1U)) continue;
        const int want = ((plus_mask >> q) & 1U) ? 1 : 0;
        int pa = 0, pb = 0;
        int a = find(ctx.u[q], pa), b = find(ctx.v[q], pb);
        if (a == b) {
            if ((pa ^ pb) != want) return false;
        } else {
            parent[a] = b;
            parity[a] = pa ^ pb ^ want;
        }
    }
    return true;
}

struct Tally {
    std::uint64_t failures = 0;
    std::uint64_t ratio_zero = 0;
    std::array<std::uint64_t, 8> ratio_pow{};
    std::array<std::uint64_t, 24> by_value{};
    std::array<std::uint64_t, kIsoTypeCount> by_isotype{};
    std::array<std::uint64_t, kIsoTypeCount> balanced_by_isotype{};

    void merge(const Tally& o) {
        failures += o.failures;
        ratio_zero += o.ratio_zero;
        for (std::size_t i = 0; i < ratio_pow.size(); ++i) ratio_pow[i] += o.ratio_pow[i];
        for (std::size_t i = 0; i < by_value.size(); ++i) by_value[i] += o.by_value[i];
        for (std::size_t i = 0; i < by_isotype.size(); ++i) {
            by_isotype[i] += o.by_isotype[i];
            balanced_by_isotype[i] += o.balanced_by_isotype[i];
        }
    }
};

void tally_index_set(const IndexContext& ctx, Tally& tally) {
    const unsigned full = (1U << ctx.k) - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) < 4) continue;  // a nonforest needs at least four edges
        const SupportInfo info = support_info(ctx, mask);
        if (info.beta1 < 1) continue;
        const int type = static_cast<int>(info.type);
        // enumerate subsets of mask as the (+)-entries
        unsigned plus = 0;
        while (true) {
            ++tally.failures;
            ++tally.by_isotype[type];
            if (signing_balanced(ctx, mask, plus)) {
                ++tally.ratio_pow[info.beta1];
                ++tally.by_value[ctx.k + ctx.f0 - info.beta0];
                ++tally.balanced_by_isotype[type];
            } else {
                ++tally.ratio_zero;
            }
            if (plus == mask) break;
            plus = (plus - mask) & mask;
        }
    }
}

}  // namespace

void enumerate_failures(int k, int n, const std::function<void(const FailureRecord&)>& fn) {
    check_args(k, n);
    const int m = (n - 1) * (n - 1);
    if (k < 4) return;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    std::uint64_t pow3 = 1;
    for (int i = 0; i < k; ++i) pow3 *= 3;
    do {
        const IndexContext ctx(comb, n);
        std::vector<SupportInfo> info(1U << k);
        std::vector<bool> known(1U << k, false);
        std::vector<Index2> positions(ctx.pos.begin(), ctx.pos.begin() + k);
        const IndexSet dom(n, n, positions);
        std::vector<int> vals(k);
        for (std::uint64_t code = 0; code < pow3; ++code) {
            std::uint64_t c = code;
            unsigned mask = 0;
            for (int q = k - 1; q >= 0; --q) {
                vals[q] = static_cast<int>(c % 3) - 1;
                c /= 3;
                if (vals[q] != 0) mask |= 1U << q;
            }
            if (std::popcount(mask) < 4) continue;
            if (!known[mask]) {
                info[mask] = support_info(ctx, mask);
                known[mask] = true;
            }
            if (info[mask].beta1 < 1) continue;
            FailureRecord rec;
            rec.b = PartialTernaryMatrix(dom, vals);
            rec.isotype = info[mask].type;
            rec.ratio = ratio_chio_lcf(rec.b);
            rec.value = p_chio(rec.b);
            fn(rec);
        }
    } while (next_combination(comb, m));
}

CountReport count_failures(int k, int n, unsigned workers) {
    check_args(k, n);
    if (workers == 0) workers = default_workers();
    const int m = (n - 1) * (n - 1);
    const std::uint64_t total_sets = choose_u64(m, k);
    std::vector<Tally> tallies(workers);
    auto run = [&](unsigned w) {
        const std::uint64_t lo = total_sets * w / workers, hi = total_sets * (w + 1) / workers;
        if (lo >= hi || k < 4) return;
        std::vector<int> comb = unrank_combination(m, k, lo);
        for (std::uint64_t r = lo; r < hi; ++r) {
            tally_index_set(IndexContext(comb, n), tallies[w]);
            next_combination(comb, m);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    Tally sum;
    for (const auto& t : tallies) sum.merge(t);

    CountReport rep;
    rep.k = k;
    rep.n = n;
    rep.total_events = BigInt(total_sets) * boost::multiprecision::pow(BigInt(3), k);
    rep.failures = sum.failures;
    rep.ratio_zero = sum.ratio_zero;
    for (std::size_t i = 1; i < sum.ratio_pow.size(); ++i)
        if (sum.ratio_pow[i]) rep.ratio_pow[static_cast<int>(i)] = sum.ratio_pow[i];
    for (std::size_t i = 0; i < sum.by_value.size(); ++i)
        if (sum.by_value[i]) rep.by_value[static_cast<int>(i)] = sum.by_value[i];
    for (int i = 0; i < kIsoTypeCount; ++i) {
        rep.by_isotype[i] = sum.by_isotype[i];
        rep.balanced_by_isotype[i] = sum.balanced_by_isotype[i];
    }
    return rep;
}

}  // namespace chio
