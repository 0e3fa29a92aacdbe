#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "subadd/graph.hpp"

namespace subadd {

using Json = nlohmann::json;

// Readers throw ParseError naming the offending JSON path ("$.edges[2][0]").
Graph read_graph(const Json& doc);
Poset read_poset(const Json& doc);
TotalOrder read_order(const Json& doc);
Matching read_matching(const Json& doc);
Realizer read_realizer(const Json& doc);

Json write_graph(const Graph& g);
Json write_poset(const Poset& p);
Json write_order(const TotalOrder& sigma);
Json write_matching(const Matching& m);
Json write_realizer(const Realizer& phi);

Json write_vertex_list(std::span<const int> vertices);

Json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& doc);

namespace json_detail {

// Helpers shared by the readers in other modules.
const Json& field(const Json& obj, const std::string& key, const std::string& path);
void expect_type(const Json& doc, const std::string& type, const std::string& path);
long long as_integer(const Json& v, const std::string& path);
int as_index(const Json& v, int bound, const std::string& path);
Rational as_rational(const Json& v, const std::string& path);
ExtCoord as_coord(const Json& v, const std::string& path);

}  // namespace json_detail

}  // namespace subadd
