#pragma once

#include <string>

#include "json.hpp"

#include "chio/census_oracle.hpp"
#include "chio/failure_enum.hpp"
#include "chio/measures.hpp"
#include "chio/signed_graph.hpp"
#include "chio/switching.hpp"

namespace chio {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& v);
Json to_json(const IndexSet& set);
Json to_json(const PartialTernaryMatrix& b);
Json to_json(const SignMatrix& a);
Json to_json(const SignedBipartiteGraph& g);
Json to_json(const DyadicProb& p);
Json to_json(const Ratio& r);
Json to_json(const CountReport& r);
Json to_json(const RankCensus& r);
Json event_report(const Event& e);

std::string csv_header();
std::string csv_row(const CountReport& r);

// Accepts {dims, entries}, a nested array of rows (read as a fully specified
// condensate of an (r+1)x(c+1) matrix) or '+-0' row strings separated by
// '/', ',', ';' or whitespace. Entries outside {-1,0,1} are rejected.
PartialTernaryMatrix parse_ternary(const std::string& text);
// {dims, entries} with entries in {-1,1}, a nested array, or '+-' rows.
SignMatrix parse_sign_matrix(const std::string& text);

}  // namespace chio
