#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "wpb/codes.hpp"
#include "wpb/errors.hpp"
#include "wpb/isometry.hpp"

namespace wpb::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json load_json(const std::filesystem::path& path);

Poset parse_poset(const Json& j);
Labeling parse_labeling(const Json& j);
Alphabet parse_alphabet(const Json& j);
WeightFunction parse_weight(const Json& j, const Alphabet& a);
std::vector<int> parse_coords(const Json& j);
BlockVector parse_vector(const Json& j, const Space& space);
Code parse_code(const Json& j, const Space& space, std::uint64_t budget = kDefaultVectorBudget);
FunctionTable parse_function(const Json& j, const SpaceContext& ctx);
BlockMatrix parse_matrix(const Json& j, const Space& space);

Json to_json(const Poset& p);
Json to_json(ElementSet e);
Json to_json(const Permutation& phi);
Json to_json(const BlockVector& v);
Json to_json(const BlockMatrix& t);
Json to_json(const CodeReport& r);
Json to_json(const FunctionTable& f);
Json to_json(const Error& e);

}  // namespace wpb::io
