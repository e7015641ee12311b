#include "polyban/io.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "polyban/errors.hpp"

namespace polyban::io {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_entry(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
  parse_error("expected a rational (string \"p/q\" or integer), found " + j.dump());
}

RatVec rational_row(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  if (j.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has " + std::to_string(j.size()) +
                                                  " entries, expected " + std::to_string(expected));
  }
  RatVec out;
  for (const auto& e : j) out.push_back(rational_entry(e));
  return out;
}

std::vector<RatVec> rational_rows(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of arrays");
  std::vector<RatVec> out;
  for (const auto& row : j) out.push_back(rational_row(row, dim, what));
  return out;
}

ordered_json rational_json_row(const RatVec& v) {
  ordered_json row = ordered_json::array();
  for (const auto& r : v) row.push_back(r.str());
  return row;
}

std::size_t dim_field(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0) {
    parse_error("space document needs a nonnegative integer \"dim\"");
  }
  return static_cast<std::size_t>(j["dim"].get<long long>());
}

PolyhedralSpace space_from_json(const json& j, const Context& ctx) {
  if (!j.is_object()) parse_error("space document must be an object");
  const std::size_t dim = dim_field(j);
  const bool has_v = j.contains("vertices");
  const bool has_f = j.contains("facets");
  if (!has_v && !has_f) parse_error("space document needs \"vertices\" or \"facets\"");
  if (dim == 0) return PolyhedralSpace::zero();
  PolyhedralSpace K = has_v ? PolyhedralSpace::from_vertices(rational_rows(j["vertices"], dim, "vertex"), dim, ctx.dim_cap)
                            : PolyhedralSpace::from_facets(rational_rows(j["facets"], dim, "facet"), dim, ctx.dim_cap);
  if (has_v && has_f) {
    std::vector<RatVec> given = rational_rows(j["facets"], dim, "facet");
    std::set<RatVec> a(given.begin(), given.end()), b(K.facets().begin(), K.facets().end());
    if (a != b) parse_error("the facet list does not describe the same ball as the vertex list");
  }
  return K;
}

std::optional<PolyhedralSpace> named_space(std::string_view ref) {
  static const std::regex pattern(R"(^(ell_one|ell_infinity)\((\d+)\)$)");
  const std::string s(ref);
  if (s == "real_line") return PolyhedralSpace::real_line();
  if (s == "zero") return PolyhedralSpace::zero();
  std::smatch m;
  if (std::regex_match(s, m, pattern)) {
    const std::size_t n = std::stoul(m[2].str());
    return m[1].str() == "ell_one" ? PolyhedralSpace::ell_one(n) : PolyhedralSpace::ell_infinity(n);
  }
  return std::nullopt;
}

fs::path locate(std::string_view ref, const fs::path& base_dir, const Context& ctx) {
  const fs::path p(ref);
  if (p.is_absolute()) return p;
  if (fs::exists(base_dir / p)) return base_dir / p;
  std::optional<fs::path> root = ctx.workspace ? ctx.workspace : workspace_from_env();
  if (root && fs::exists(*root / p)) return *root / p;
  return base_dir / p;
}

PolyhedralSpace space_from_ref(const json& j, const fs::path& base_dir, const Context& ctx) {
  if (j.is_string()) return resolve_space(j.get<std::string>(), base_dir, ctx);
  return space_from_json(j, ctx);
}

LinearMap map_from_json(const json& j, const fs::path& base_dir, const Context& ctx) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("matrix")) {
    parse_error("map document needs \"domain\", \"codomain\" and \"matrix\"");
  }
  PolyhedralSpace dom = space_from_ref(j["domain"], base_dir, ctx);
  PolyhedralSpace cod = space_from_ref(j["codomain"], base_dir, ctx);
  const json& rows = j["matrix"];
  if (!rows.is_array()) parse_error("\"matrix\" must be an array of rows");
  if (rows.size() != cod.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(rows.size()) + " rows but the codomain has dimension " +
                                                  std::to_string(cod.dim()));
  }
  Matrix m = Matrix::from_rows(rational_rows(rows, dom.dim(), "matrix row"), dom.dim());
  return LinearMap(std::move(dom), std::move(cod), std::move(m));
}

LinearMap map_from_ref(const json& j, const fs::path& base_dir, const Context& ctx) {
  if (j.is_string()) return read_map(locate(j.get<std::string>(), base_dir, ctx), ctx);
  return map_from_json(j, base_dir, ctx);
}

ordered_json space_object(const PolyhedralSpace& K) {
  ordered_json j;
  j["dim"] = K.dim();
  j["vertices"] = ordered_json::array();
  for (const auto& v : K.vertices()) j["vertices"].push_back(rational_json_row(v));
  j["facets"] = ordered_json::array();
  for (const auto& f : K.facets()) j["facets"].push_back(rational_json_row(f));
  return j;
}

json read_json_file(const fs::path& path) { return parse_json(read_text(path)); }

}  // namespace

std::optional<fs::path> workspace_from_env() {
  if (const char* w = std::getenv("POLYBAN_WORKSPACE"); w && *w) return fs::path(w);
  return std::nullopt;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

PolyhedralSpace parse_space(std::string_view json_text, const Context& ctx) {
  return space_from_json(parse_json(json_text), ctx);
}

std::string space_to_json(const PolyhedralSpace& K) { return space_object(K).dump(2) + "\n"; }

PolyhedralSpace resolve_space(std::string_view ref, const fs::path& base_dir, const Context& ctx) {
  if (auto named = named_space(ref)) return *named;
  return read_space(locate(ref, base_dir, ctx), ctx);
}

PolyhedralSpace read_space(const fs::path& path, const Context& ctx) {
  return space_from_json(read_json_file(path), ctx);
}

void write_space(const fs::path& path, const PolyhedralSpace& K) { write_text(path, space_to_json(K)); }

LinearMap parse_map(std::string_view json_text, const fs::path& base_dir, const Context& ctx) {
  return map_from_json(parse_json(json_text), base_dir, ctx);
}

LinearMap read_map(const fs::path& path, const Context& ctx) {
  return map_from_json(read_json_file(path), path.parent_path(), ctx);
}

std::string map_to_json(const LinearMap& f, const std::optional<std::string>& domain_ref,
                        const std::optional<std::string>& codomain_ref) {
  ordered_json j;
  if (domain_ref) {
    j["domain"] = *domain_ref;
  } else {
    j["domain"] = space_object(f.domain());
  }
  if (codomain_ref) {
    j["codomain"] = *codomain_ref;
  } else {
    j["codomain"] = space_object(f.codomain());
  }
  j["matrix"] = ordered_json::array();
  for (const auto& row : f.matrix().row_list()) j["matrix"].push_back(rational_json_row(row));
  return j.dump(2) + "\n";
}

void write_map(const fs::path& path, const LinearMap& f, const std::optional<std::string>& domain_ref,
               const std::optional<std::string>& codomain_ref) {
  write_text(path, map_to_json(f, domain_ref, codomain_ref));
}

Chain read_chain(const fs::path& path, const Context& ctx) {
  const json j = read_json_file(path);
  const fs::path base = path.parent_path();
  if (!j.is_object()) parse_error("chain manifest must be an object");
  if (j.contains("links")) {
    if (!j["links"].is_array()) parse_error("\"links\" must be an array");
    std::vector<LinearMap> links;
    for (const auto& l : j["links"]) links.push_back(map_from_ref(l, base, ctx));
    if (!links.empty()) return Chain(std::move(links));
  }
  if (j.contains("space")) return Chain(space_from_ref(j["space"], base, ctx));
  parse_error("chain manifest needs a nonempty \"links\" list or a \"space\"");
}

MorphismCatalog read_catalog(const fs::path& path, const Context& ctx) {
  const json j = read_json_file(path);
  const fs::path base = path.parent_path();
  if (!j.is_object() || !j.contains("maps") || !j["maps"].is_array()) {
    parse_error("catalog manifest needs a \"maps\" array");
  }
  MorphismCatalog out;
  for (const auto& entry : j["maps"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
      parse_error("catalog entries need a \"name\"");
    }
    const std::string name = entry["name"].get<std::string>();
    if (entry.contains("file")) {
      out.add(name, map_from_ref(entry["file"], base, ctx));
    } else if (entry.contains("map")) {
      out.add(name, map_from_json(entry["map"], base, ctx));
    } else {
      parse_error("catalog entry '" + name + "' needs \"file\" or \"map\"");
    }
  }
  return out;
}

std::vector<RatVec> parse_vector_list(std::string_view text) {
  std::vector<RatVec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(parse_rational_list(piece, ','));
    start = end + 1;
  }
  return out;
}

}  // namespace polyban::io
