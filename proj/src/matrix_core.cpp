#include "chio/matrix_core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace chio {

IndexSet::IndexSet(int s, int t, std::vector<Index2> members) : s_(s), t_(t), members_(std::move(members)) {
    if (s < 2 || t < 2) throw std::invalid_argument("index set dimensions must be at least 2");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto& p : members_) {
        if (p.row < 1 || p.col < 1 || p.row > s || p.col > t)
            throw std::invalid_argument("index (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                                        ") out of range");
    }
}

IndexSet IndexSet::full(int s, int t) {
    std::vector<Index2> m;
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= t; ++j) m.push_back({i, j});
    return IndexSet(s, t, std::move(m));
}

IndexSet IndexSet::inner(int s, int t) {
    std::vector<Index2> m;
    for (int i = 1; i < s; ++i)
        for (int j = 1; j < t; ++j) m.push_back({i, j});
    return IndexSet(s, t, std::move(m));
}

bool IndexSet::contains(Index2 p) const { return std::binary_search(members_.begin(), members_.end(), p); }

bool IndexSet::within_inner() const {
    return std::all_of(members_.begin(), members_.end(), [&](const Index2& p) { return p.row < s_ && p.col < t_; });
}

std::vector<int> IndexSet::p1() const {
    std::vector<int> r;
    for (const auto& p : members_) r.push_back(p.row);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<int> IndexSet::p2() const {
    std::vector<int> c;
    for (const auto& p : members_) c.push_back(p.col);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool IndexSet::is_rectangular() const { return members_.size() == p1().size() * p2().size(); }

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

IndexSet chio_extend(const IndexSet& inner) {
    if (!inner.within_inner()) throw std::invalid_argument("chio_extend: index outside [s-1]x[t-1]");
    const int s = inner.s(), t = inner.t();
    std::vector<Index2> m = inner.members();
    m.push_back({s, t});
    for (int i : inner.p1()) m.push_back({i, t});
    for (int j : inner.p2()) m.push_back({s, j});
    return IndexSet(s, t, std::move(m));
}

bool is_chio_set(const IndexSet& set) {
    const int s = set.s(), t = set.t();
    if (!set.contains({s, t})) return false;
    for (const auto& p : set.members()) {
        if (!set.contains({p.row, t}) || !set.contains({s, p.col})) return false;
    }
    return true;
}

SignMatrix::SignMatrix(IndexSet domain, const std::vector<int>& values)
    : domain_(std::move(domain)), cells_(static_cast<std::size_t>(domain_.s()) * domain_.t(), 0) {
    if (values.size() != domain_.size()) throw std::invalid_argument("sign matrix: value count does not match domain");
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] != 1 && values[k] != -1) throw std::invalid_argument("sign matrix entries must be +1 or -1");
        const auto& p = domain_.members()[k];
        cells_[static_cast<std::size_t>(p.row - 1) * t() + (p.col - 1)] = static_cast<std::int8_t>(values[k]);
    }
}

SignMatrix SignMatrix::full(int s, int t, const std::vector<int>& row_major) {
    return SignMatrix(IndexSet::full(s, t), row_major);
}

SignMatrix SignMatrix::from_code(int s, int t, std::uint64_t code) {
    std::vector<int> v(static_cast<std::size_t>(s) * t);
    for (std::size_t b = 0; b < v.size(); ++b) v[b] = ((code >> b) & 1U) ? 1 : -1;
    return full(s, t, v);
}

SignMatrix SignMatrix::parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    for (char ch : text) {
        if (ch == '+') {
            rows.back().push_back(1);
        } else if (ch == '-') {
            rows.back().push_back(-1);
        } else if (ch == '/' || ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!rows.back().empty()) rows.emplace_back();
        } else {
            throw std::invalid_argument(std::string("sign matrix: unexpected character '") + ch + "'");
        }
    }
    if (rows.back().empty()) rows.pop_back();
    if (rows.size() < 2) throw std::invalid_argument("sign matrix needs at least 2 rows");
    const std::size_t t = rows.front().size();
    std::vector<int> flat;
    for (const auto& r : rows) {
        if (r.size() != t) throw std::invalid_argument("sign matrix rows have unequal length");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return full(static_cast<int>(rows.size()), static_cast<int>(t), flat);
}

int SignMatrix::at(int i, int j) const {
    if (i < 1 || j < 1 || i > s() || j > t()) throw std::out_of_range("sign matrix index");
    return cells_[static_cast<std::size_t>(i - 1) * t() + (j - 1)];
}

PartialTernaryMatrix::PartialTernaryMatrix(IndexSet domain, const std::vector<int>& values) : domain_(std::move(domain)) {
    if (!domain_.within_inner()) throw std::invalid_argument("ternary matrix domain must lie in [s-1]x[t-1]");
    if (values.size() != domain_.size()) throw std::invalid_argument("ternary matrix: value count does not match domain");
    values_.reserve(values.size());
    for (int v : values) {
        if (v < -1 || v > 1) throw std::invalid_argument("ternary matrix entries must be -1, 0 or 1");
        values_.push_back(static_cast<std::int8_t>(v));
    }
}

PartialTernaryMatrix PartialTernaryMatrix::full(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("ternary matrix must be non-empty");
    const int r = static_cast<int>(rows.size()), c = static_cast<int>(rows.front().size());
    std::vector<int> flat;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ternary matrix rows have unequal length");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return PartialTernaryMatrix(IndexSet::inner(r + 1, c + 1), flat);
}

PartialTernaryMatrix PartialTernaryMatrix::empty(int s, int t) { return PartialTernaryMatrix(IndexSet(s, t, {}), {}); }

int PartialTernaryMatrix::supp() const {
    return static_cast<int>(std::count_if(values_.begin(), values_.end(), [](std::int8_t v) { return v != 0; }));
}

IndexSet PartialTernaryMatrix::support() const {
    std::vector<Index2> m;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k] != 0) m.push_back(domain_.members()[k]);
    return IndexSet(s(), t(), std::move(m));
}

std::optional<int> PartialTernaryMatrix::at(Index2 p) const {
    const auto& m = domain_.members();
    auto it = std::lower_bound(m.begin(), m.end(), p);
    if (it == m.end() || *it != p) return std::nullopt;
    return values_[static_cast<std::size_t>(it - m.begin())];
}

namespace {

void require_chio_domain(const SignMatrix& a) {
    if (!is_chio_set(a.domain())) throw std::invalid_argument("condensation requires a Chio set domain");
}

std::vector<Index2> condensed_positions(const SignMatrix& a) {
    std::vector<Index2> out;
    for (const auto& p : a.domain().members())
        if (p.row < a.s() && p.col < a.t()) out.push_back(p);
    return out;
}

}  // namespace

PartialTernaryMatrix chio_condense(const SignMatrix& a) {
    require_chio_domain(a);
    const int s = a.s(), t = a.t();
    const int pivot = a.at(s, t);
    auto pos = condensed_positions(a);
    std::vector<int> vals;
    vals.reserve(pos.size());
    for (const auto& p : pos) vals.push_back((a.at(p.row, p.col) * pivot - a.at(p.row, t) * a.at(s, p.col)) / 2);
    return PartialTernaryMatrix(IndexSet(s, t, pos), vals);
}

PartialTernaryMatrix abs_condense(const SignMatrix& a) {
    auto b = chio_condense(a);
    std::vector<int> vals;
    for (auto v : b.values()) vals.push_back(v != 0 ? 1 : 0);
    return PartialTernaryMatrix(b.domain(), vals);
}

IntMatrix::IntMatrix(int rows, int cols, const std::vector<long long>& row_major) : IntMatrix(rows, cols) {
    if (row_major.size() != data_.size()) throw std::invalid_argument("int matrix: wrong number of entries");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = row_major[k];
}

IntMatrix IntMatrix::from(const SignMatrix& a) {
    if (!a.is_full()) throw std::invalid_argument("int matrix conversion needs a full sign matrix");
    IntMatrix m(a.s(), a.t());
    for (int i = 1; i <= a.s(); ++i)
        for (int j = 1; j <= a.t(); ++j) m(i - 1, j - 1) = a.at(i, j);
    return m;
}

IntMatrix IntMatrix::from(const PartialTernaryMatrix& b) {
    IntMatrix m(b.s() - 1, b.t() - 1);
    for (std::size_t k = 0; k < b.values().size(); ++k) {
        const auto& p = b.positions()[k];
        m(p.row - 1, p.col - 1) = static_cast<int>(b.values()[k]);
    }
    return m;
}

IntMatrix chio_condensate_int(const SignMatrix& a) {
    if (!a.is_full()) throw std::invalid_argument("integer condensate needs a full sign matrix");
    const int s = a.s(), t = a.t();
    IntMatrix c(s - 1, t - 1);
    for (int i = 1; i < s; ++i)
        for (int j = 1; j < t; ++j) c(i - 1, j - 1) = a.at(i, j) * a.at(s, t) - a.at(i, t) * a.at(s, j);
    return c;
}

namespace {

// Bareiss elimination with full pivoting. Every intermediate entry is a minor
// of the input, so the divisions are exact. Returns the rank; det receives the
// signed determinant when the matrix is square.
template <class T>
int bareiss(std::vector<T>& m, int rows, int cols, T* det) {
    auto at = [&](int r, int c) -> T& { return m[static_cast<std::size_t>(r) * cols + c]; };
    T prev = 1;
    int sign = 1;
    int rank = 0;
    const int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        int pr = -1, pc = -1;
        for (int r = k; r < rows && pr < 0; ++r)
            for (int c = k; c < cols; ++c)
                if (at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        if (pr != k) {
            for (int c = 0; c < cols; ++c) std::swap(at(pr, c), at(k, c));
            sign = -sign;
        }
        if (pc != k) {
            for (int r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, k));
            sign = -sign;
        }
        for (int r = k + 1; r < rows; ++r) {
            for (int c = k + 1; c < cols; ++c) at(r, c) = (at(k, k) * at(r, c) - at(r, k) * at(k, c)) / prev;
            at(r, k) = 0;
        }
        prev = at(k, k);
        ++rank;
    }
    if (det) {
        if (rank < rows || rows != cols)
            *det = 0;
        else
            *det = sign > 0 ? prev : T(-prev);
    }
    return rank;
}

}  // namespace

BigInt det_int(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    std::vector<BigInt> buf;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) buf.push_back(m(r, c));
    BigInt d;
    bareiss(buf, m.rows(), m.cols(), &d);
    return d;
}

int rank_int(const IntMatrix& m) {
    std::vector<BigInt> buf;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) buf.push_back(m(r, c));
    return bareiss<BigInt>(buf, m.rows(), m.cols(), nullptr);
}

int rank_small(std::vector<long long> m, int rows, int cols) { return bareiss<long long>(m, rows, cols, nullptr); }

long long det_small(std::vector<long long> m, int n) {
    if (n == 0) return 1;
    long long d = 0;
    bareiss<long long>(m, n, n, &d);
    return d;
}

}  // namespace chio
