#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyban/colimits.hpp"
#include "polyban/purity.hpp"

namespace polyban {

struct CatalogEntry {
  std::string name;
  LinearMap map;
  bool isometry = false;
};

/// Named maps of norm <= 1, each flagged by whether it is an isometry.
class MorphismCatalog {
 public:
  /// Throws NormTooLarge if ‖h‖ > 1.
  void add(std::string name, LinearMap h);
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<CatalogEntry> isometries() const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<CatalogEntry> entries_;
};

/// Vertices of Hom≤1(A, K) = {F : F(v) ∈ Ball_K for every vertex v of Ball_A}.
/// Throws DimensionCapExceeded if dim A · dim K exceeds the cap.
std::vector<LinearMap> operator_ball_vertices(const PolyhedralSpace& A, const PolyhedralSpace& K,
                                              std::size_t dim_cap = kDefaultDimensionCap);

/// max over f ∈ Hom≤1(A, K) of min{‖g∘h − f‖ : g: B → K, ‖g‖ <= 1}.
/// The max is attained at a vertex of the operator ball; probe holds that
/// vertex and witness the best g for it. Throws NormTooLarge if ‖h‖ > 1.
DefectReport injectivity_defect(const LinearMap& h, const PolyhedralSpace& K,
                                std::size_t dim_cap = kDefaultDimensionCap);

struct ProductInjectivity {
  DefectReport product;  // computed on K ⊕_max L
  Rational on_first;
  Rational on_second;
};

ProductInjectivity product_injectivity(const LinearMap& h, const PolyhedralSpace& K, const PolyhedralSpace& L,
                                       std::size_t dim_cap = kDefaultDimensionCap);

struct SaturationEntry {
  LinearMap f;
  /// Smallest ‖g∘h − f‖ over verified isometric candidates g, if any.
  std::optional<Rational> best_bound;
  std::optional<LinearMap> best_g;
  /// min over all g with ‖g‖ <= 1; a lower bound for any isometry.
  Rational relaxation_bound;
  std::size_t candidates_checked = 0;
  /// A candidate achieved 0 exactly.
  bool certified = false;
  /// The bound is only an upper estimate.
  bool heuristic() const { return !certified; }
};

/// For each isometry f: A → K, searches isometries g: B → K among maps
/// sending a vertex basis of Ball_B to vertices of Ball_K and among the
/// extra candidates, reporting the best ‖g∘h − f‖.
/// Throws NotAnIsometry if h or some f is not an isometry.
std::vector<SaturationEntry> saturation_report(const LinearMap& h, const PolyhedralSpace& K,
                                               const std::vector<LinearMap>& test_isometries,
                                               const std::vector<LinearMap>& extra_candidates = {},
                                               std::size_t candidate_limit = 4096);

struct LindenstraussEntry {
  std::string name;
  DefectReport report;
};

struct LindenstraussReport {
  std::vector<LindenstraussEntry> entries;
  /// True when every isometry in the catalog had defect 0. This is a
  /// statement about the catalog only.
  bool no_counterexample_in_catalog() const;
};

LindenstraussReport lindenstrauss_report(const PolyhedralSpace& K, const MorphismCatalog& catalog,
                                         std::size_t dim_cap = kDefaultDimensionCap);

struct GurariiRound {
  std::size_t round = 0;
  std::string h_name;
  LinearMap h;  // A → B
  LinearMap f;  // A → K_round
  LinearMap g;  // B → K_{round+1}, g∘h = link∘f
  Rational eps;
  std::size_t dim = 0;  // dim K_{round+1}
  IsometryDefect link_defect;
  /// Residuals ‖k g_r h_r − k f_r‖ of requests r = 0..round at the new stage.
  std::vector<Rational> residuals;
};

struct GurariiLog {
  std::vector<PolyhedralSpace> stages;
  std::vector<LinearMap> links;
  std::vector<GurariiRound> rounds;
  bool truncated = false;
  std::string stop_reason;
};

struct GurariiOptions {
  std::size_t rounds = 1;
  std::size_t denom_cap = 2;
  std::size_t dim_cap = kDefaultDimensionCap;
};

/// The k-th map f: A → K of the request stream: images of the unit vectors
/// of A are drawn from (j/D)·v for vertices v of Ball_K and j = D..1, then 0,
/// in mixed-radix order; maps with ‖f‖ > 1 or f = 0 are skipped. The stream
/// wraps around when k exceeds the number of valid maps.
LinearMap request_candidate(const PolyhedralSpace& A, const PolyhedralSpace& K, std::size_t k, std::size_t denom_cap);

/// Iterated ε = 0 pushouts of catalog isometries along requested maps. Round
/// n uses isometry n mod |H| and request candidate n div |H|. Stops early,
/// with truncated set, when a pushout exceeds the dimension cap.
/// Throws EmptyInput if the catalog has no isometries.
GurariiLog gurarii_build(const PolyhedralSpace& seed, const MorphismCatalog& catalog, const GurariiOptions& options);

}  // namespace polyban
