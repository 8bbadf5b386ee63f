#include "wpb/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace wpb::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " document must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " document lacks \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::vector<int>> int_matrix(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(int_array(row, what));
  return out;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Poset parse_poset(const Json& j) {
  const int s = as_int(field(j, "s", "poset"), "s");
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    for (const auto& pair : int_matrix(j["covers"], "covers")) {
      if (pair.size() != 2) throw ParseError("each cover relation must be a pair [i, j]");
      covers.emplace_back(pair[0], pair[1]);
    }
  }
  return Poset::from_cover_relations(s, covers);
}

Labeling parse_labeling(const Json& j) { return Labeling(int_array(field(j, "k", "labeling"), "k")); }

Alphabet parse_alphabet(const Json& j) { return Alphabet(as_int(field(j, "m", "alphabet"), "m")); }

WeightFunction parse_weight(const Json& j, const Alphabet& a) {
  if (!j.is_object()) throw ParseError("weight document must be a JSON object");
  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw ParseError("builtin weight name must be a string");
    const auto name = j["builtin"].get<std::string>();
    if (name == "hamming") return hamming_weight(a);
    if (name == "lee") return lee_weight(a);
    throw ParseError("unknown builtin weight \"" + name + "\"");
  }
  if (j.contains("table")) return custom_weight(a, int_array(j["table"], "weight table"));
  throw ParseError("weight document needs \"builtin\" or \"table\"");
}

std::vector<int> parse_coords(const Json& j) { return int_array(field(j, "coords", "vector"), "coords"); }

BlockVector parse_vector(const Json& j, const Space& space) { return BlockVector(space, parse_coords(j)); }

Code parse_code(const Json& j, const Space& space, std::uint64_t budget) {
  if (!j.is_object()) throw ParseError("code document must be a JSON object");
  auto to_vectors = [&](const Json& rows, const char* what) {
    std::vector<BlockVector> out;
    for (auto& c : int_matrix(rows, what)) out.emplace_back(space, std::move(c));
    return out;
  };
  if (j.contains("generator")) return Code::from_generator(space, to_vectors(j["generator"], "generator"), budget);
  if (j.contains("codewords")) return Code::from_codewords(space, to_vectors(j["codewords"], "codewords"));
  throw ParseError("code document needs \"codewords\" or \"generator\"");
}

FunctionTable parse_function(const Json& j, const SpaceContext& ctx) {
  const int t = as_int(field(j, "t", "function"), "t");
  const Json& map = field(j, "map", "function");
  if (!map.is_array()) throw ParseError("function map must be an array");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (const auto& entry : map)
    pairs.emplace_back(int_array(field(entry, "tail", "function entry"), "tail"),
                       int_array(field(entry, "head", "function entry"), "head"));
  return FunctionTable::from_pairs(ctx, t, pairs);
}

BlockMatrix parse_matrix(const Json& j, const Space& space) {
  return BlockMatrix::from_rows(space, int_matrix(field(j, "rows", "matrix"), "rows"));
}

// ---------------------------------------------------------------------------

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return Json{{"s", p.size()}, {"covers", covers}};
}

Json to_json(ElementSet e) { return Json(e.elements()); }

Json to_json(const Permutation& phi) { return Json(phi.image()); }

Json to_json(const BlockVector& v) { return Json(std::vector<int>(v.coords().begin(), v.coords().end())); }

Json to_json(const BlockMatrix& t) { return Json(t.rows()); }

Json to_json(const CodeReport& r) {
  return Json{{"K", r.K},
              {"d_w", r.d_w},
              {"d_H", r.d_H},
              {"lambda", r.lambda},
              {"mu", r.mu},
              {"bound", r.singleton_bound},
              {"is_mds", r.is_mds},
              {"packing_radius", r.packing_radius},
              {"is_perfect", r.is_perfect}};
}

Json to_json(const FunctionTable& f) {
  Json map = Json::array();
  for (std::uint64_t i = 0; i < f.tail_count(); ++i) map.push_back({{"tail", f.tail_at(i)}, {"head", f.head_at(i)}});
  return Json{{"t", f.t()}, {"map", map}};
}

Json to_json(const Error& e) {
  return Json{{"error", {{"code", e.code()}, {"message", e.what()}, {"witness", e.witness()}}}};
}

}  // namespace wpb::io
