#include "chio/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace chio {

Json to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
    return v.str();
}

Json to_json(const IndexSet& set) {
    Json out = {{"dims", {set.s(), set.t()}}, {"positions", Json::array()}};
    for (const auto& p : set.members()) out["positions"].push_back({p.row, p.col});
    return out;
}

Json to_json(const PartialTernaryMatrix& b) {
    Json out = {{"dims", {b.s(), b.t()}}, {"entries", Json::array()}};
    for (std::size_t q = 0; q < b.positions().size(); ++q)
        out["entries"].push_back({b.positions()[q].row, b.positions()[q].col, static_cast<int>(b.values()[q])});
    return out;
}

Json to_json(const SignMatrix& a) {
    Json out = {{"dims", {a.s(), a.t()}}, {"entries", Json::array()}};
    for (const auto& p : a.domain().members()) out["entries"].push_back({p.row, p.col, a.at(p.row, p.col)});
    return out;
}

Json to_json(const SignedBipartiteGraph& g) {
    Json out = {{"dims", {g.s, g.t}}, {"vertices", Json::array()}, {"edges", Json::array()}};
    for (int i : g.rows) out["vertices"].push_back({"r", i});
    for (int j : g.cols) out["vertices"].push_back({"c", j});
    for (const auto& e : g.edges) out["edges"].push_back({e.i, e.j, e.sign});
    return out;
}

Json to_json(const DyadicProb& p) {
    if (p.is_zero()) return {{"zero", true}};
    return {{"log2", -p.exponent()}};
}

Json to_json(const Ratio& r) {
    if (r.zero) return {{"zero", true}};
    return {{"log2", r.log2}};
}

Json to_json(const CountReport& r) {
    Json out = {{"k", r.k},
                {"n", r.n},
                {"total", to_json(r.total_events)},
                {"failures", to_json(r.failures)},
                {"ratio0", to_json(r.ratio_zero)},
                {"ratio_log2", Json::object()},
                {"by_value_log2", Json::object()},
                {"by_isotype", Json::object()}};
    for (const auto& [e, c] : r.ratio_pow) out["ratio_log2"][std::to_string(e)] = to_json(c);
    for (const auto& [e, c] : r.by_value) out["by_value_log2"][std::to_string(-e)] = to_json(c);
    for (int t = 0; t < kIsoTypeCount; ++t)
        if (r.by_isotype[t] != 0) out["by_isotype"][to_string(static_cast<IsoType>(t))] = to_json(r.by_isotype[t]);
    return out;
}

Json to_json(const RankCensus& r) {
    return {{"s", r.s},
            {"t", r.t},
            {"visited", r.visited},
            {"rank_sign", r.rank_sign},
            {"rank_condensate", r.rank_condensate},
            {"rank_binary", r.rank_binary},
            {"rank_drop_violations", r.rank_drop_violations},
            {"lemma_holds", r.lemma_holds()},
            {"uniform_after_forgetting", r.uniform_after_forgetting()}};
}

Json event_report(const Event& e) {
    const Ratio r = ratio_chio_lcf(e.b);
    Json out = {{"B", to_json(e.b)},
                {"J", to_json(e.j)},
                {"p_chio", to_json(p_chio(e.b))},
                {"p_lcf", to_json(p_lcf(e.b))},
                {"ratio_log2", r.zero ? Json(nullptr) : Json(r.log2)},
                {"isotype", to_string(chio_profile(e.b).isotype)}};
    return out;
}

std::string csv_header() {
    std::string h = "k,n,total,failures,ratio0,ratio2,ratio4";
    for (int e = 7; e <= 11; ++e) h += ",v" + std::to_string(e);
    for (int t = 1; t <= 20; ++t) h += ",t" + std::to_string(t);
    return h;
}

std::string csv_row(const CountReport& r) {
    std::string row = std::to_string(r.k) + "," + std::to_string(r.n) + "," + r.total_events.str() + "," +
                      r.failures.str() + "," + r.ratio_zero.str() + "," + r.ratio_count(1).str() + "," +
                      r.ratio_count(2).str();
    for (int e = 7; e <= 11; ++e) row += "," + r.value_count(e).str();
    for (int t = 1; t <= 20; ++t) row += "," + r.by_isotype[t].str();
    return row;
}

namespace {

std::vector<std::vector<int>> parse_row_strings(const std::string& text, bool allow_zero) {
    std::vector<std::vector<int>> rows(1);
    for (char c : text) {
        if (c == '/' || c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
            if (!rows.back().empty()) rows.emplace_back();
            continue;
        }
        if (c == '+') rows.back().push_back(1);
        else if (c == '-') rows.back().push_back(-1);
        else if (c == '0' && allow_zero) rows.back().push_back(0);
        else throw std::invalid_argument(std::string("unexpected character '") + c + "' in matrix rows");
    }
    if (rows.back().empty()) rows.pop_back();
    return rows;
}

void check_rectangular(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw std::invalid_argument("matrix rows differ in length");
}

int entry_value(const Json& v, bool allow_zero) {
    if (!v.is_number_integer()) throw std::invalid_argument("matrix entries must be integers");
    const int x = v.get<int>();
    if (x != 1 && x != -1 && !(allow_zero && x == 0)) throw std::invalid_argument("matrix entry out of range");
    return x;
}

std::vector<std::vector<int>> json_rows(const Json& j, bool allow_zero) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        rows.emplace_back();
        for (const auto& v : r) rows.back().push_back(entry_value(v, allow_zero));
    }
    check_rectangular(rows);
    return rows;
}

struct DimsEntries {
    int s = 0, t = 0;
    std::vector<Index2> pos;
    std::vector<int> vals;
};

DimsEntries json_entries(const Json& j, bool allow_zero) {
    DimsEntries d;
    if (!j.contains("dims") || !j.contains("entries")) throw std::invalid_argument("matrix object needs dims and entries");
    d.s = j["dims"].at(0).get<int>();
    d.t = j["dims"].at(1).get<int>();
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("entries must be [i,j,v] triples");
        d.pos.push_back({e[0].get<int>(), e[1].get<int>()});
        d.vals.push_back(entry_value(e[2], allow_zero));
    }
    return d;
}

// Reorders values to follow the sorted domain.
std::vector<int> aligned(const IndexSet& set, const DimsEntries& d) {
    if (set.size() != d.pos.size()) throw std::invalid_argument("repeated matrix position");
    std::vector<int> vals(set.size());
    for (std::size_t q = 0; q < d.pos.size(); ++q) {
        const auto it = std::lower_bound(set.members().begin(), set.members().end(), d.pos[q]);
        vals[static_cast<std::size_t>(it - set.members().begin())] = d.vals[q];
    }
    return vals;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[' || c == '{';
    }
    return false;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
}

}  // namespace

PartialTernaryMatrix parse_ternary(const std::string& text) {
    if (!looks_like_json(text)) {
        auto rows = parse_row_strings(text, true);
        check_rectangular(rows);
        return PartialTernaryMatrix::full(rows);
    }
    const Json j = parse_json(text);
    try {
        if (j.is_array()) return PartialTernaryMatrix::full(json_rows(j, true));
        const DimsEntries d = json_entries(j, true);
        IndexSet set(d.s, d.t, d.pos);
        return PartialTernaryMatrix(set, aligned(set, d));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
}

SignMatrix parse_sign_matrix(const std::string& text) {
    std::vector<std::vector<int>> rows;
    if (!looks_like_json(text)) {
        rows = parse_row_strings(text, false);
        check_rectangular(rows);
    } else {
        const Json j = parse_json(text);
        try {
            if (!j.is_array()) {
                const DimsEntries d = json_entries(j, false);
                IndexSet set(d.s, d.t, d.pos);
                return SignMatrix(set, aligned(set, d));
            }
            rows = json_rows(j, false);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
        }
    }
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return SignMatrix::full(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), flat);
}

}  // namespace chio
