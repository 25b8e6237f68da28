#include "chio/census_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>

#include "chio/measures.hpp"

namespace chio {

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

void check_census_budget(const CensusConfig& cfg) {
    if (cfg.s < 2 || cfg.t < 2) throw std::invalid_argument("census dimensions must be at least 2");
    if (cfg.s * cfg.t > cfg.max_bits || cfg.s * cfg.t > 32)
        throw std::invalid_argument("census budget exceeded: 2^" + std::to_string(cfg.s * cfg.t) + " matrices");
}

void condense_code(int s, int t, std::uint64_t code, std::uint32_t& supp, std::uint32_t& neg) {
    auto bit = [&](int i, int j) { return static_cast<unsigned>((code >> ((i - 1) * t + (j - 1))) & 1U); };
    const unsigned pivot = bit(s, t);
    supp = 0;
    neg = 0;
    int p = 0;
    for (int i = 1; i < s; ++i) {
        const unsigned ri = bit(i, t);
        for (int j = 1; j < t; ++j, ++p) {
            const unsigned a = bit(i, j);
            // b_ij != 0 iff a_ij a_st = -a_it a_sj; then b_ij = a_ij a_st.
            if ((a ^ pivot ^ ri ^ bit(s, j)) != 0U) {
                supp |= 1U << p;
                if (a != pivot) neg |= 1U << p;
            }
        }
    }
}

int rank_of_code(int s, int t, std::uint64_t code) {
    std::vector<long long> m(static_cast<std::size_t>(s) * t);
    for (std::size_t b = 0; b < m.size(); ++b) m[b] = ((code >> b) & 1U) ? 1 : -1;
    return rank_small(std::move(m), s, t);
}

int rank_of_masks(int rows, int cols, std::uint32_t supp, std::uint32_t neg) {
    std::vector<long long> m(static_cast<std::size_t>(rows) * cols, 0);
    for (std::size_t b = 0; b < m.size(); ++b)
        if ((supp >> b) & 1U) m[b] = ((neg >> b) & 1U) ? -1 : 1;
    return rank_small(std::move(m), rows, cols);
}

std::uint64_t ternary_code(int cells, std::uint32_t supp, std::uint32_t neg) {
    std::uint64_t code = 0, w = 1;
    for (int p = 0; p < cells; ++p, w *= 3)
        if ((supp >> p) & 1U) code += w * (((neg >> p) & 1U) ? 2 : 1);
    return code;
}

void ternary_decode(int cells, std::uint64_t code, std::uint32_t& supp, std::uint32_t& neg) {
    supp = 0;
    neg = 0;
    for (int p = 0; p < cells; ++p, code /= 3) {
        const auto d = code % 3;
        if (d != 0) supp |= 1U << p;
        if (d == 2) neg |= 1U << p;
    }
}

PartialTernaryMatrix matrix_from_masks(int s, int t, std::uint32_t supp, std::uint32_t neg) {
    std::vector<int> vals;
    const int cells = (s - 1) * (t - 1);
    for (int p = 0; p < cells; ++p) vals.push_back(((supp >> p) & 1U) ? (((neg >> p) & 1U) ? -1 : 1) : 0);
    return PartialTernaryMatrix(IndexSet::inner(s, t), vals);
}

std::uint64_t EmpiricalChio::count(const PartialTernaryMatrix& b) const {
    std::uint32_t supp = 0, neg = 0;
    if (b.s() != n || b.t() != n || b.dom() != (n - 1) * (n - 1))
        throw std::invalid_argument("empirical lookup needs a fully specified condensate");
    for (int p = 0; p < b.dom(); ++p) {
        if (b.values()[p] != 0) supp |= 1U << p;
        if (b.values()[p] < 0) neg |= 1U << p;
    }
    return counts[ternary_code(b.dom(), supp, neg)];
}

namespace {

struct PreimageAcc {
    std::uint32_t* counts = nullptr;
    int cells = 0;
    void visit(const CensusItem& it) {
        std::atomic_ref<std::uint32_t>(counts[ternary_code(cells, it.supp, it.neg)]).fetch_add(1, std::memory_order_relaxed);
    }
    void merge(const PreimageAcc&) {}
};

}  // namespace

EmpiricalChio empirical_p_chio(int n, unsigned workers) {
    CensusConfig cfg{n, n, workers, 25, false};
    check_census_budget(cfg);
    EmpiricalChio e;
    e.n = n;
    const int cells = (n - 1) * (n - 1);
    e.counts.assign(pow3(cells), 0);
    std::uint32_t* data = e.counts.data();
    run_census<PreimageAcc>(cfg, [&] { return PreimageAcc{data, cells}; });
    return e;
}

FibreCheck check_fibres(const EmpiricalChio& e) {
    FibreCheck fc;
    const int n = e.n, cells = (n - 1) * (n - 1);
    for (std::uint64_t code = 0; code < e.counts.size(); ++code) {
        std::uint32_t supp = 0, neg = 0;
        ternary_decode(cells, code, supp, neg);
        const auto b = matrix_from_masks(n, n, supp, neg);
        const BigInt expect = fibre_cardinality(Event::full(b));
        ++fc.condensates;
        if (e.counts[code] != 0) ++fc.positive;
        if (BigInt(e.counts[code]) != expect) ++fc.mismatches;
        if (e.counts[code] != 0 && p_chio(b).is_zero()) ++fc.unbalanced_hits;
    }
    return fc;
}

namespace {

struct RankAcc {
    int s = 0, t = 0;
    std::uint64_t visited = 0;
    std::uint64_t drop = 0;
    std::vector<std::uint64_t> rank_sign, rank_cond;
    RankAcc(int s_, int t_) : s(s_), t(t_), rank_sign(std::min(s_, t_) + 1, 0), rank_cond(std::min(s_, t_), 0) {}
    void visit(const CensusItem& it) {
        ++visited;
        ++rank_sign[it.rank_a];
        ++rank_cond[it.rank_b];
        if (it.rank_b != it.rank_a - 1) ++drop;
    }
    void merge(const RankAcc& o) {
        visited += o.visited;
        drop += o.drop;
        for (std::size_t r = 0; r < rank_sign.size(); ++r) rank_sign[r] += o.rank_sign[r];
        for (std::size_t r = 0; r < rank_cond.size(); ++r) rank_cond[r] += o.rank_cond[r];
    }
};

constexpr std::uint64_t kCheckpointVersion = 1;

std::vector<std::uint64_t> encode_rank_state(const RankAcc& acc, std::uint64_t next_code) {
    std::vector<std::uint64_t> w{kCheckpointVersion, static_cast<std::uint64_t>(acc.s), static_cast<std::uint64_t>(acc.t),
                                 next_code, acc.visited, acc.drop, acc.rank_sign.size()};
    w.insert(w.end(), acc.rank_sign.begin(), acc.rank_sign.end());
    w.push_back(acc.rank_cond.size());
    w.insert(w.end(), acc.rank_cond.begin(), acc.rank_cond.end());
    return w;
}

bool decode_rank_state(const std::vector<std::uint64_t>& w, RankAcc& acc, std::uint64_t& next_code) {
    if (w.size() < 7 || w[0] != kCheckpointVersion) return false;
    if (w[1] != static_cast<std::uint64_t>(acc.s) || w[2] != static_cast<std::uint64_t>(acc.t)) return false;
    std::size_t p = 6;
    if (w[p] != acc.rank_sign.size() || w.size() < p + 1 + w[p] + 1) return false;
    next_code = w[3];
    acc.visited = w[4];
    acc.drop = w[5];
    for (std::size_t r = 0; r < acc.rank_sign.size(); ++r) acc.rank_sign[r] = w[p + 1 + r];
    p += 1 + acc.rank_sign.size();
    if (w[p] != acc.rank_cond.size() || w.size() != p + 1 + w[p]) return false;
    for (std::size_t r = 0; r < acc.rank_cond.size(); ++r) acc.rank_cond[r] = w[p + 1 + r];
    return true;
}

}  // namespace

void write_checkpoint(const std::string& path, const std::vector<std::uint64_t>& words) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out.write("CHIOCENS\0", 9);
        for (std::uint64_t v : words) {
            unsigned char buf[8];
            for (int b = 0; b < 8; ++b) buf[b] = static_cast<unsigned char>(v >> (8 * b));
            out.write(reinterpret_cast<const char*>(buf), 8);
        }
        if (!out) throw std::runtime_error("checkpoint write failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot move checkpoint into place");
}

bool read_checkpoint(const std::string& path, std::vector<std::uint64_t>& words) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[9];
    in.read(magic, 9);
    if (!in || std::memcmp(magic, "CHIOCENS\0", 9) != 0) throw std::runtime_error("not a census checkpoint: " + path);
    words.clear();
    unsigned char buf[8];
    while (in.read(reinterpret_cast<char*>(buf), 8)) {
        std::uint64_t v = 0;
        for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(buf[b]) << (8 * b);
        words.push_back(v);
    }
    if (in.gcount() != 0) throw std::runtime_error("truncated census checkpoint: " + path);
    return true;
}

RankCensus rank_census(int s, int t, unsigned workers, const std::string& checkpoint, std::uint64_t round_size,
                       std::uint64_t max_rounds) {
    CensusConfig cfg{s, t, workers == 0 ? default_workers() : workers, 25, true};
    check_census_budget(cfg);
    const std::uint64_t total = std::uint64_t{1} << (s * t);
    RankAcc acc(s, t);
    std::uint64_t next = 0;
    if (!checkpoint.empty()) {
        std::vector<std::uint64_t> words;
        if (read_checkpoint(checkpoint, words) && !decode_rank_state(words, acc, next))
            throw std::runtime_error("checkpoint does not match this census: " + checkpoint);
    }
    if (round_size == 0) round_size = total;
    for (std::uint64_t round = 0; next < total && (max_rounds == 0 || round < max_rounds); ++round) {
        const std::uint64_t end = std::min(total, next + round_size);
        std::vector<RankAcc> part(cfg.workers, RankAcc(s, t));
        const unsigned W = cfg.workers;
        auto job = [&](unsigned w) {
            census_range(cfg, next + (end - next) * w / W, next + (end - next) * (w + 1) / W, part[w]);
        };
        if (W == 1) {
            job(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < W; ++w) pool.emplace_back(job, w);
            for (auto& th : pool) th.join();
        }
        for (const auto& p : part) acc.merge(p);
        next = end;
        if (!checkpoint.empty()) write_checkpoint(checkpoint, encode_rank_state(acc, next));
    }

    RankCensus rc;
    rc.s = s;
    rc.t = t;
    rc.visited = acc.visited;
    rc.rank_sign = acc.rank_sign;
    rc.rank_condensate = acc.rank_cond;
    rc.rank_drop_violations = acc.drop;
    const int rows = s - 1, cols = t - 1, cells = rows * cols;
    rc.rank_binary.assign(std::min(rows, cols) + 1, 0);
    for (std::uint32_t m = 0; m < (1U << cells); ++m) ++rc.rank_binary[rank_of_masks(rows, cols, m, 0)];
    return rc;
}

bool RankCensus::lemma_holds() const {
    if (rank_drop_violations != 0 || rank_sign.empty() || rank_sign[0] != 0) return false;
    for (std::size_t r = 1; r < rank_sign.size(); ++r)
        if (rank_sign[r] != rank_condensate[r - 1]) return false;
    return true;
}

bool RankCensus::uniform_after_forgetting() const {
    const int cells = (s - 1) * (t - 1);
    const std::size_t levels = rank_condensate.size();
    if (rank_binary.size() != levels) return false;
    for (std::uint32_t r_set = 0; r_set < (1U << levels); ++r_set) {
        BigInt lhs = 0, rhs = 0;
        for (std::size_t r = 0; r < levels; ++r) {
            if (!((r_set >> r) & 1U)) continue;
            lhs += BigInt(rank_condensate[r]) << cells;
            rhs += BigInt(rank_binary[r]) << (s * t);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

SingularReport singular_count(int n, unsigned workers) {
    if (n < 2 || n > 5) throw std::invalid_argument("singular_count supports 2 <= n <= 5");
    if (workers == 0) workers = default_workers();
    SingularReport rep;
    rep.n = n;
    const RankCensus rc = rank_census(n, n, workers);
    for (int r = 0; r < n; ++r) rep.singular_sign += rc.rank_sign[r];
    for (int r = 0; r < n - 1; ++r) rep.singular_binary += rc.rank_binary[r];
    const int cells = (n - 1) * (n - 1);
    rep.q4_right_denominator_exp = cells;
    const std::uint64_t total = pow3(cells);
    std::vector<std::uint64_t> partial(workers, 0);
    auto job = [&](unsigned w) {
        std::uint64_t acc = 0;
        for (std::uint64_t code = total * w / workers; code < total * (w + 1) / workers; ++code) {
            std::uint32_t supp = 0, neg = 0;
            ternary_decode(cells, code, supp, neg);
            if (rank_of_masks(n - 1, n - 1, supp, neg) < n - 1) acc += std::uint64_t{1} << (cells - std::popcount(supp));
        }
        partial[w] = acc;
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& th : pool) th.join();
    rep.q4_right_numerator = 0;
    for (auto v : partial) rep.q4_right_numerator += v;
    rep.prop_identity = (BigInt(rep.singular_sign) << cells) == (BigInt(rep.singular_binary) << (n * n));
    return rep;
}

bool KwiseReport::ok() const {
    for (std::size_t k = 0; k < events.size(); ++k) {
        if (chio_mismatch[k] != 0 || !matches_enumeration[k]) return false;
        if (k <= 3 && disagreements[k] != 0) return false;
    }
    return true;
}

namespace {

using EventKey = std::vector<int>;  // sorted position indices, then values

EventKey key_of(const PartialTernaryMatrix& b) {
    EventKey k;
    for (const auto& p : b.positions()) k.push_back((p.row - 1) * (b.t() - 1) + (p.col - 1));
    for (auto v : b.values()) k.push_back(v);
    return k;
}

}  // namespace

KwiseReport kwise_agreement_check(const EmpiricalChio& e, int k_max) {
    const int n = e.n, m = (n - 1) * (n - 1);
    KwiseReport rep;
    rep.n = n;
    rep.k_max = std::min(k_max, m);
    const int nn = n * n;

    // Nonzero fibres as digit arrays.
    std::vector<std::pair<std::vector<std::int8_t>, std::uint64_t>> fibres;
    for (std::uint64_t code = 0; code < e.counts.size(); ++code) {
        if (e.counts[code] == 0) continue;
        std::vector<std::int8_t> d(m);
        std::uint64_t c = code;
        for (int p = 0; p < m; ++p, c /= 3) d[p] = static_cast<std::int8_t>(c % 3);
        fibres.emplace_back(std::move(d), e.counts[code]);
    }

    for (int k = 0; k <= rep.k_max; ++k) {
        std::uint64_t events = 0, disagree = 0, mismatch = 0;
        std::set<EventKey> disagreeing;
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        const std::uint64_t cells = pow3(k);
        while (true) {
            std::vector<std::uint64_t> marg(cells, 0);
            for (const auto& [d, cnt] : fibres) {
                std::uint64_t key = 0;
                for (int q = 0; q < k; ++q) key = key * 3 + static_cast<std::uint64_t>(d[comb[q]]);
                marg[key] += cnt;
            }
            std::vector<Index2> pos;
            for (int q = 0; q < k; ++q) pos.push_back({comb[q] / (n - 1) + 1, comb[q] % (n - 1) + 1});
            const IndexSet dom(n, n, pos);
            for (std::uint64_t key = 0; key < cells; ++key) {
                std::vector<int> vals(k);
                std::uint64_t c = key;
                int supp = 0;
                for (int q = k - 1; q >= 0; --q, c /= 3) {
                    const int d = static_cast<int>(c % 3);
                    vals[q] = d == 0 ? 0 : (d == 1 ? 1 : -1);
                    if (d != 0) ++supp;
                }
                ++events;
                const PartialTernaryMatrix b(dom, vals);
                const std::uint64_t lcf = std::uint64_t{1} << (nn - k - supp);
                if (marg[key] != lcf) {
                    ++disagree;
                    disagreeing.insert(key_of(b));
                }
                const DyadicProb pc = p_chio(b);
                const std::uint64_t want = pc.is_zero() ? 0 : (std::uint64_t{1} << (nn - pc.exponent()));
                if (marg[key] != want) ++mismatch;
            }
            int i = k - 1;
            while (i >= 0 && comb[i] == m - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
        std::set<EventKey> enumerated;
        if (k <= 6) enumerate_failures(k, n, [&](const FailureRecord& r) { enumerated.insert(key_of(r.b)); });
        rep.events.push_back(events);
        rep.disagreements.push_back(disagree);
        rep.chio_mismatch.push_back(mismatch);
        rep.matches_enumeration.push_back(k > 6 || enumerated == disagreeing);
    }
    return rep;
}

}  // namespace chio
