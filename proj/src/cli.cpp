#include "wpb/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "wpb/io.hpp"

namespace wpb::cli {

namespace {

using io::Json;

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0xff;  // field separator
  h *= kFnvPrime;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing>";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load(const std::string& path, const char* what) {
  if (path.empty()) throw ValidationError(std::string("missing --") + what + " file");
  return io::load_json(path);
}

Space build_space(const RunConfig& c) {
  Poset p = io::parse_poset(load(c.poset_path, "poset"));
  Labeling lab = c.labeling_path.empty() ? Labeling::uniform(p.size()) : io::parse_labeling(io::load_json(c.labeling_path));
  Alphabet a = io::parse_alphabet(load(c.alphabet_path, "alphabet"));
  WeightFunction w = c.weight_path.empty() ? hamming_weight(a) : io::parse_weight(io::load_json(c.weight_path), a);
  return SpaceContext::make(std::move(p), std::move(lab), a, std::move(w));
}

Json space_summary(const SpaceContext& ctx) {
  return Json{{"s", ctx.s()},
              {"n", ctx.n()},
              {"m", ctx.m()},
              {"k", ctx.labeling().dims()},
              {"M_w", ctx.weight_function().max_weight()},
              {"m_w", ctx.weight_function().min_weight()}};
}

Json vector_list(const std::vector<BlockVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::to_json(v));
  return out;
}

Json cmd_poset_info(const RunConfig& c) {
  const Poset p = io::parse_poset(load(c.poset_path, "poset"));
  const auto cls = p.classify();
  Json payload{{"poset", io::to_json(p)},
               {"is_chain", cls.is_chain},
               {"is_antichain", cls.is_antichain},
               {"maximal_elements", io::to_json(p.maximal_elements(p.ground_set()))}};
  Json principal = Json::array();
  for (int i = 1; i <= p.size(); ++i) principal.push_back(io::to_json(p.principal_ideal(i).ideal));
  payload["principal_ideals"] = principal;
  const auto ideals = p.ideals();
  payload["ideal_count"] = ideals.size();
  if (c.list) {
    Json all = Json::array();
    for (auto e : ideals) all.push_back(io::to_json(e));
    payload["ideals"] = all;
  }
  Json auts = Json::array();
  if (c.labeling_path.empty()) {
    for (const auto& phi : automorphisms(p)) auts.push_back(io::to_json(phi));
  } else {
    const Labeling lab = io::parse_labeling(io::load_json(c.labeling_path));
    for (const auto& phi : labeled_automorphisms(p, lab)) auts.push_back(io::to_json(phi));
  }
  payload["aut_order"] = auts.size();
  payload["automorphisms"] = auts;
  return payload;
}

Json cmd_weigh(const RunConfig& c) {
  const Space space = build_space(c);
  const BlockVector u = io::parse_vector(load(c.vector_path, "vector"), space);
  const ElementSet supp = block_support(u);
  Json blocks = Json::array();
  for (int i = 1; i <= space->s(); ++i) blocks.push_back(block_max_weight(u, i));
  return Json{{"space", space_summary(*space)},
              {"vector", io::to_json(u)},
              {"weight", weight(u)},
              {"support", io::to_json(supp)},
              {"ideal", io::to_json(space->poset().ideal_of(supp))},
              {"block_weights", blocks}};
}

Json cmd_distance(const RunConfig& c) {
  const Space space = build_space(c);
  const BlockVector u = io::parse_vector(load(c.vector_path, "vector"), space);
  const BlockVector v = io::parse_vector(load(c.vector2_path, "vector2"), space);
  return Json{{"u", io::to_json(u)}, {"v", io::to_json(v)}, {"distance", distance(u, v)}};
}

Json cmd_ball(const RunConfig& c) {
  const Space space = build_space(c);
  const BlockVector center = io::parse_vector(load(c.vector_path, "vector"), space);
  const auto b = ball(center, c.radius, c.budget);
  Json payload{{"center", io::to_json(center)}, {"radius", c.radius}, {"size", b.size()}};
  if (c.list) payload["vectors"] = vector_list(b);
  return payload;
}

Json cmd_code_report(const RunConfig& c) {
  const Space space = build_space(c);
  const Code code = io::parse_code(load(c.code_path, "code"), space, c.budget);
  Json payload{{"space", space_summary(*space)}};
  payload.update(io::to_json(analyze(code, c.budget)));
  payload["is_linear"] = code.is_linear();
  if (space->poset().is_standard_chain()) {
    const auto chk = mds_iff_perfect_check(code, c.budget);
    payload["mds_iff_perfect"] = {{"applicable", chk.applicable}, {"consistent", chk.consistent}};
  }
  if (c.list) payload["codewords"] = vector_list(code.codewords());
  return payload;
}

Json cmd_perfect_construct(const RunConfig& c) {
  const Space space = build_space(c);
  std::optional<FunctionTable> f;
  if (!c.function_path.empty()) {
    f = io::parse_function(io::load_json(c.function_path), *space);
    if (c.t >= 0 && c.t != f->t()) throw ArityError("--t disagrees with the function file", {c.t, f->t()});
  } else {
    if (c.t < 0) throw ArityError("--t is required without a function file");
    if (c.generate == "identity")
      f = FunctionTable::identity_like(*space, c.t);
    else if (c.generate == "random")
      f = FunctionTable::random(*space, c.t, c.seed);
    else
      throw ValidationError("--generate must be identity or random");
  }
  const Code code = perfect_from_function(space, *f);
  const int r = f->t() * space->weight_function().max_weight();
  Json payload{{"t", f->t()}, {"radius", r}, {"K", code.size()}, {"is_perfect", is_r_perfect(code, r, c.budget)},
               {"f_is_linear", f->is_linear()}};
  if (c.list) {
    payload["function"] = io::to_json(*f);
    payload["codewords"] = vector_list(code.codewords());
  }
  return payload;
}

Json decomposition_json(const IsometryDecomposition& d) {
  return Json{{"phi", io::to_json(d.phi)}, {"s_part", io::to_json(d.s_part)}};
}

Json cmd_isometry_check(const RunConfig& c) {
  const Space space = build_space(c);
  const BlockMatrix t = io::parse_matrix(load(c.matrix_path, "matrix"), space);
  const bool iso = is_isometry(t, c.budget);
  Json payload{{"is_isometry", iso}, {"in_triangular_group", in_triangular_group(t)}};
  if (iso) payload["decomposition"] = decomposition_json(decompose(t, c.budget));
  return payload;
}

Json cmd_isometry_group(const RunConfig& c) {
  const Space space = build_space(c);
  EnumerationOptions opts{c.budget, c.matrix_budget, c.exhaustive};
  const GroupReport r = verify_semidirect(space, opts);
  Json payload{{"space", space_summary(*space)},
               {"gl_order", r.gl_order},
               {"u_order", r.u_order},
               {"aut_order", r.aut_order},
               {"product_matches", r.product_matches},
               {"all_decomposed", r.all_decomposed},
               {"invariants_hold", r.invariants_hold},
               {"search", c.exhaustive ? "exhaustive" : "pruned"}};
  if (auto w = ring_warning(*space)) payload["warning"] = *w;
  if (c.list) {
    Json els = Json::array();
    for (const auto& t : r.elements) els.push_back(io::to_json(t));
    payload["elements"] = els;
  }
  return payload;
}

Json cmd_decompose(const RunConfig& c) {
  const Space space = build_space(c);
  const BlockMatrix t = io::parse_matrix(load(c.matrix_path, "matrix"), space);
  Json payload = decomposition_json(decompose(t, c.budget));
  payload["recomposes"] = true;
  return payload;
}

Json cmd_validate(const RunConfig& c, bool& ok) {
  Json diags = Json::array();
  for (const auto& d : validate_bundle(c)) diags.push_back({{"code", d.code}, {"message", d.message}});
  ok = diags.empty();
  return Json{{"ok", ok}, {"diagnostics", diags}};
}

void emit(const Json& doc, bool pretty, std::ostream& out) { out << (pretty ? doc.dump(2) : doc.dump()) << '\n'; }

}  // namespace

std::vector<Diagnostic> validate_bundle(const RunConfig& c) {
  std::vector<Diagnostic> out;
  auto parse_failure = [&](const std::string& what, const std::exception& e) {
    out.push_back({"parse", what + ": " + e.what()});
  };
  auto try_load = [&](const std::string& path, const std::string& what) -> std::optional<Json> {
    if (path.empty()) return std::nullopt;
    try {
      return io::load_json(path);
    } catch (const std::exception& e) {
      parse_failure(what, e);
      return std::nullopt;
    }
  };

  std::optional<int> s, n, m;
  if (auto j = try_load(c.poset_path, "poset")) {
    try {
      s = io::parse_poset(*j).size();
    } catch (const std::exception& e) {
      parse_failure("poset", e);
    }
  }
  std::optional<Labeling> lab;
  if (auto j = try_load(c.labeling_path, "labeling")) {
    try {
      lab = io::parse_labeling(*j);
    } catch (const std::exception& e) {
      parse_failure("labeling", e);
    }
  } else if (c.labeling_path.empty() && s) {
    lab = Labeling::uniform(*s);
  }
  if (lab) {
    n = lab->total();
    if (s && lab->size() != *s)
      out.push_back({"labeling_poset_mismatch", "labeling has " + std::to_string(lab->size()) +
                                                    " entries but the poset has s = " + std::to_string(*s)});
  }
  if (auto j = try_load(c.alphabet_path, "alphabet")) {
    try {
      m = io::parse_alphabet(*j).modulus();
    } catch (const std::exception& e) {
      parse_failure("alphabet", e);
    }
  }
  if (auto j = try_load(c.weight_path, "weight")) {
    if (j->is_object() && j->contains("table") && (*j)["table"].is_array()) {
      const auto len = static_cast<int>((*j)["table"].size());
      if (m && len != *m)
        out.push_back({"weight_alphabet_mismatch",
                       "weight table has length " + std::to_string(len) + " but m = " + std::to_string(*m)});
    } else if (!(j->is_object() && j->contains("builtin"))) {
      out.push_back({"parse", "weight: document needs \"builtin\" or \"table\""});
    }
  }
  auto check_length = [&](const std::string& path, const std::string& what) {
    auto j = try_load(path, what);
    if (!j) return;
    try {
      const auto coords = io::parse_coords(*j);
      if (n && static_cast<int>(coords.size()) != *n)
        out.push_back({"vector_length_mismatch", what + " has " + std::to_string(coords.size()) +
                                                     " coordinates but n = " + std::to_string(*n)});
    } catch (const std::exception& e) {
      parse_failure(what, e);
    }
  };
  check_length(c.vector_path, "vector");
  check_length(c.vector2_path, "vector2");
  auto check_rows = [&](const std::string& path, const std::string& what, const char* key, bool square) {
    auto j = try_load(path, what);
    if (!j || !n) return;
    const char* k = key;
    if (!j->is_object()) return;
    if (!j->contains(k) && std::string(key) == "codewords") k = "generator";
    if (!j->contains(k) || !(*j)[k].is_array()) return;
    const auto& rows = (*j)[k];
    if (square && static_cast<int>(rows.size()) != *n)
      out.push_back({"matrix_size_mismatch", what + " has " + std::to_string(rows.size()) + " rows but n = " + std::to_string(*n)});
    for (const auto& row : rows)
      if (row.is_array() && static_cast<int>(row.size()) != *n) {
        out.push_back({square ? "matrix_size_mismatch" : "vector_length_mismatch",
                       what + " has a row of length " + std::to_string(row.size()) + " but n = " + std::to_string(*n)});
        break;
      }
  };
  check_rows(c.code_path, "code", "codewords", false);
  check_rows(c.matrix_path, "matrix", "rows", true);
  return out;
}

std::string inputs_digest(const RunConfig& c) {
  std::uint64_t h = kFnvOffset;
  fnv(h, c.command);
  const std::pair<const char*, const std::string*> files[] = {
      {"poset", &c.poset_path},       {"labeling", &c.labeling_path}, {"alphabet", &c.alphabet_path},
      {"weight", &c.weight_path},     {"vector", &c.vector_path},     {"vector2", &c.vector2_path},
      {"code", &c.code_path},         {"function", &c.function_path}, {"matrix", &c.matrix_path}};
  for (auto [role, path] : files) {
    fnv(h, role);
    fnv(h, path->empty() ? std::string() : read_bytes(*path));
  }
  std::ostringstream params;
  params << c.radius << ' ' << c.t << ' ' << c.generate << ' ' << c.budget << ' ' << c.matrix_budget << ' ' << c.seed
         << ' ' << c.list << ' ' << c.exhaustive;
  fnv(h, params.str());
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

int run(const RunConfig& c, std::ostream& out) {
  Json doc{{"command", c.command}, {"inputs_digest", inputs_digest(c)}};
  int status = 0;
  try {
    if (c.budget < 1 || c.matrix_budget < 1) throw ValidationError("budgets must be at least 1");
    Json payload;
    if (c.command == "poset-info")
      payload = cmd_poset_info(c);
    else if (c.command == "weigh")
      payload = cmd_weigh(c);
    else if (c.command == "distance")
      payload = cmd_distance(c);
    else if (c.command == "ball")
      payload = cmd_ball(c);
    else if (c.command == "code-report")
      payload = cmd_code_report(c);
    else if (c.command == "perfect-construct")
      payload = cmd_perfect_construct(c);
    else if (c.command == "isometry-check")
      payload = cmd_isometry_check(c);
    else if (c.command == "isometry-group")
      payload = cmd_isometry_group(c);
    else if (c.command == "decompose")
      payload = cmd_decompose(c);
    else if (c.command == "validate") {
      bool ok = true;
      payload = cmd_validate(c, ok);
      status = ok ? 0 : 1;
    } else
      throw ValidationError("unknown command \"" + c.command + "\"");
    for (auto it = payload.begin(); it != payload.end(); ++it) doc[it.key()] = it.value();
  } catch (const BudgetError& e) {
    doc.update(io::to_json(e));
    status = 2;
  } catch (const Error& e) {
    doc.update(io::to_json(e));
    status = 1;
  } catch (const std::exception& e) {
    doc["error"] = {{"code", "internal"}, {"message", e.what()}, {"witness", Json::array()}};
    status = 1;
  }
  emit(doc, c.pretty, out);
  return status;
}

}  // namespace wpb::cli
