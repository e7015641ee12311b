#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyban/colimits.hpp"
#include "polyban/injectivity.hpp"

namespace polyban::io {

/// Where relative references are resolved: first next to the referencing
/// file, then under the workspace root (POLYBAN_WORKSPACE unless set here).
struct Context {
  std::optional<std::filesystem::path> workspace;
  std::size_t dim_cap = kDefaultDimensionCap;
};

/// The workspace root from POLYBAN_WORKSPACE, if set.
std::optional<std::filesystem::path> workspace_from_env();

/// Reads a whole file. Throws IoError.
std::string read_text(const std::filesystem::path& path);
/// Writes a whole file, creating parent directories. Throws IoError.
void write_text(const std::filesystem::path& path, std::string_view text);

/// Space documents: {"dim": n, "vertices": [["p/q", ...], ...]} or
/// {"dim": n, "facets": [...]}. When both lists are present they must
/// describe the same ball. Entries are strings "p", "p/q" or JSON integers.
PolyhedralSpace parse_space(std::string_view json_text, const Context& ctx = {});
std::string space_to_json(const PolyhedralSpace& K);

/// A space reference: a path, or one of real_line, zero, ell_one(n),
/// ell_infinity(n).
PolyhedralSpace resolve_space(std::string_view ref, const std::filesystem::path& base_dir, const Context& ctx = {});
PolyhedralSpace read_space(const std::filesystem::path& path, const Context& ctx = {});
void write_space(const std::filesystem::path& path, const PolyhedralSpace& K);

/// Map documents: {"domain": ref-or-space, "codomain": ref-or-space,
/// "matrix": [[...], ...]} with one row per codomain coordinate.
LinearMap parse_map(std::string_view json_text, const std::filesystem::path& base_dir, const Context& ctx = {});
LinearMap read_map(const std::filesystem::path& path, const Context& ctx = {});
/// Spaces are written inline unless references are given.
std::string map_to_json(const LinearMap& f, const std::optional<std::string>& domain_ref = std::nullopt,
                        const std::optional<std::string>& codomain_ref = std::nullopt);
void write_map(const std::filesystem::path& path, const LinearMap& f,
               const std::optional<std::string>& domain_ref = std::nullopt,
               const std::optional<std::string>& codomain_ref = std::nullopt);

/// Chain manifests: {"links": [map-ref-or-map, ...]} or {"space": ref} for a
/// single-space chain.
Chain read_chain(const std::filesystem::path& path, const Context& ctx = {});

/// Catalog manifests: {"maps": [{"name": ..., "file": ref} or
/// {"name": ..., "map": {...}}, ...]}.
MorphismCatalog read_catalog(const std::filesystem::path& path, const Context& ctx = {});

/// "1,0;0,1/2" → {(1,0), (0,1/2)}. An empty string gives no vectors.
std::vector<RatVec> parse_vector_list(std::string_view text);

}  // namespace polyban::io
