#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "chio/failure_enum.hpp"

namespace chio {

using boost::multiprecision::cpp_rational;

BigInt RationalPoly::eval(long long n) const {
    cpp_rational acc = 0;
    for (auto [num, den] : coeffs) acc = acc * n + cpp_rational(num, den);
    if (denominator(acc) != 1) throw std::logic_error("polynomial value is not an integer");
    return numerator(acc);
}

const RationalPoly& ex6_total_poly() {
    static const RationalPoly p{{{18, 1}, {-180, 1}, {1868, 3}, {-2176, 3}, {-754, 3}, {428, 3}, {8144, 3}, {-11536, 3}, {1504, 1}}};
    return p;
}

const RationalPoly& ex6_ratio0_poly() {
    static const RationalPoly p{{{9, 1}, {-90, 1}, {934, 3}, {-360, 1}, {-449, 3}, {154, 1}, {3664, 3}, {-1816, 1}, {720, 1}}};
    return p;
}

const RationalPoly& ex6_ratio2_poly() {
    static const RationalPoly p{{{9, 1}, {-90, 1}, {934, 3}, {-368, 1}, {-233, 3}, {-94, 1}, {4888, 3}, {-2136, 1}, {816, 1}}};
    return p;
}

const RationalPoly& ex6_ratio4_poly() {
    static const RationalPoly p{{{8, 3}, {-24, 1}, {248, 3}, {-136, 1}, {320, 3}, {-32, 1}}};
    return p;
}

const RationalPoly& h_c4_not_k23_poly() {
    static const RationalPoly p{{{18, 1}, {-180, 1}, {612, 1}, {-608, 1}, {-774, 1}, {1348, 1}, {1200, 1}, {-2864, 1}, {1248, 1}}};
    return p;
}

BigInt xi(int n) {
    BigInt c = binomial(n - 1, 2);
    return 16 * c * c;
}

std::vector<IsoType> listed_types(int k) {
    std::vector<IsoType> out;
    switch (k) {
        case 4: out = {IsoType::T1}; break;
        case 5: out = {IsoType::T2, IsoType::T3, IsoType::T5, IsoType::T7}; break;
        case 6:
            for (int i = 2; i <= 20; ++i) out.push_back(catalogue_type(i));
            break;
        default: break;
    }
    return out;
}

BigInt realization_count_formula(IsoType type, int k, int n) {
    if (n < 3) throw std::invalid_argument("realization counts need n >= 3");
    const BigInt x = xi(n);
    const BigInt a = n - 3;
    const BigInt b = binomial(n - 3, 2);
    const int t = catalogue_index(type);
    if (k == 4 && type == IsoType::T1) return x;
    if (k == 5) {
        switch (t) {
            case 2: return 4 * a * x;
            case 3: return 8 * a * x;
            case 5: return a * a * x;
            case 7: return 2 * a * a * x;
            default: break;
        }
    }
    if (k == 6) {
        switch (t) {
            case 2: return 2 * a * x;
            case 3: return 8 * a * x;
            case 4: return 128 * binomial(n - 1, 2) * binomial(n - 1, 3);
            case 5: return (8 * a * a + 8 * b) * x;
            case 6: return (24 * a * a + 32 * b) * x;
            case 7: return 8 * a * a * x;
            case 8: return 16 * b * x;
            case 9: return 16 * a * a * x;
            case 10: return 16 * a * a * x;
            case 11: return 16 * b * x;
            case 12: return 64 * circuit_count_formula(6, n, n);
            case 13: return 10 * a * b * x;
            case 14: return 16 * a * b * x;
            case 15: return 24 * a * b * x;
            case 16: return 32 * a * b * x;
            case 17: return 8 * a * b * x;
            case 18: return 2 * b * b * x;
            case 19: return 8 * b * b * x;
            case 20: return 8 * b * b * x;
            default: break;
        }
    }
    throw std::invalid_argument("no realization count listed for " + to_string(type) + " at k=" + std::to_string(k));
}

int catalogue_beta1(IsoType type) {
    const int t = catalogue_index(type);
    if (t < 1 || t > 20) throw std::invalid_argument("not a catalogue type");
    return catalogue_graph(t).beta1();
}

int value_exponent(IsoType type, int k) {
    const int t = catalogue_index(type);
    if (k == 4 && t == 1) return 7;
    if (k == 5) {
        if (t == 2 || t == 5) return 8;
        if (t == 3 || t == 7) return 9;
    }
    if (k == 6) {
        switch (t) {
            case 2: case 5: case 13: case 18: return 9;
            case 3: case 4: case 6: case 7: case 14: case 15: case 19: return 10;
            case 8: case 9: case 10: case 11: case 12: case 16: case 17: case 20: return 11;
            default: break;
        }
    }
    throw std::invalid_argument("no value listed for " + to_string(type) + " at k=" + std::to_string(k));
}

CountReport failure_count_formula(int k, int n) {
    if (k < 4 || k > 6) throw std::invalid_argument("closed forms exist for k in {4,5,6}");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    CountReport rep;
    rep.k = k;
    rep.n = n;
    rep.total_events = binomial(static_cast<long long>(n - 1) * (n - 1), k) * boost::multiprecision::pow(BigInt(3), k);
    const BigInt c = binomial(n - 1, 2);
    if (k == 4) {
        rep.failures = 16 * c * c;
        rep.ratio_zero = rep.failures / 2;
        rep.ratio_pow[1] = rep.failures / 2;
    } else if (k == 5) {
        const BigInt m = BigInt(n - 1) * (n - 1) - 4;
        rep.failures = 48 * m * c * c;
        rep.ratio_zero = rep.failures / 2;
        rep.ratio_pow[1] = rep.failures / 2;
    } else {
        rep.failures = ex6_total_poly().eval(n);
        rep.ratio_zero = ex6_ratio0_poly().eval(n);
        rep.ratio_pow[1] = ex6_ratio2_poly().eval(n);
        rep.ratio_pow[2] = ex6_ratio4_poly().eval(n);
    }
    std::erase_if(rep.ratio_pow, [](const auto& kv) { return kv.second == 0; });
    if (n >= 3) {
        for (IsoType t : listed_types(k)) {
            const BigInt m = realization_count_formula(t, k, n);
            rep.by_isotype[catalogue_index(t)] = m;
            const BigInt bal = m >> catalogue_beta1(t);
            if (bal != 0) rep.by_value[value_exponent(t, k)] += bal;
        }
    }
    return rep;
}

HCounts h_counts(int n) {
    HCounts h;
    const BigInt c2 = binomial(n - 1, 2), c3 = binomial(n - 1, 3);
    h.c6 = 64 * 6 * c3 * c3;
    h.k23 = 2 * 64 * c3 * c2;
    h.geq = 16 * c2 * c2 * 9 * binomial(static_cast<long long>(n - 1) * (n - 1) - 4, 2);
    h.c4_not_k23 = h.geq - 3 * h.k23;
    h.c4_not_k23_poly = h_c4_not_k23_poly().eval(n);
    return h;
}

namespace {

BigInt sum_types(const CountReport& r, std::initializer_list<int> types) {
    BigInt s = 0;
    for (int t : types) s += r.by_isotype[t];
    return s;
}

}  // namespace

std::vector<RelationCheck> linear_relations(const CountReport& k5, const CountReport& k6) {
    if (k5.k != 5 || k6.k != 6) throw std::invalid_argument("linear relations need the k=5 and k=6 reports");
    return {
        {"l1", 2 * k5.by_isotype[2], k5.by_isotype[3]},
        {"l2", 2 * k5.by_isotype[5], k5.by_isotype[7]},
        {"l3", 8 * k6.by_isotype[5], sum_types(k6, {6, 7, 8, 9, 10, 11})},
        {"l4", 8 * k6.by_isotype[13], sum_types(k6, {14, 15, 16, 17})},
        {"l5", 8 * k6.by_isotype[18], sum_types(k6, {19, 20})},
    };
}

std::vector<RelationCheck> linear_relations_formula(int n) {
    return linear_relations(failure_count_formula(5, n), failure_count_formula(6, n));
}

BigInt failure_density_bound(int k, int n) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const long long m = static_cast<long long>(n - 1) * (n - 1);
    BigInt bound = 0;
    // Cir(2,n) is empty, so the j = 1 term vanishes.
    for (int j = 2; 2 * j <= k; ++j) {
        bound += boost::multiprecision::pow(BigInt(2), 2 * j) * boost::multiprecision::pow(BigInt(3), k - 2 * j) *
                 binomial(m - 2 * j, k - 2 * j) * circuit_count_formula(2 * j, n, n);
    }
    return bound;
}

}  // namespace chio
