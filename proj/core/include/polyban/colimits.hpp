#pragma once

#include <optional>
#include <vector>

#include "polyban/linear_map.hpp"

namespace polyban {

/// The ε-pushout of f: A→B and g: A→C.
///
/// For eps > 0 the apex is B ⊕ C with
///   ‖(x,y)‖ = inf{‖b‖ + ‖c‖ + eps‖a‖ : x = b + f(a), y = c − g(a)},
/// whose unit ball is the hull of Ball_B×0, 0×Ball_C and (f(v), −g(v))/eps
/// for v a vertex of Ball_A. For eps = 0 the apex is the quotient of
/// B ⊕_sum C by N = span{(f(a), −g(a))}; its coordinates are the non-pivot
/// coordinates of the reduced row echelon form of a basis of N.
struct EpsPushout {
  Rational eps;
  LinearMap f;  // A → B
  LinearMap g;  // A → C
  PolyhedralSpace apex;
  LinearMap leg_from_B;  // ḡ: B → D
  LinearMap leg_from_C;  // f̄: C → D
  /// Reduced basis of N in B ⊕ C coordinates (eps = 0 only; empty otherwise).
  std::vector<RatVec> relation_basis;
  /// Pivot coordinates of relation_basis; the apex keeps the others.
  std::vector<std::size_t> relation_pivots;
  /// The projection B ⊕ C → D (identity when eps > 0).
  Matrix quotient;
};

/// Throws NormTooLarge if ‖f‖ > 1 or ‖g‖ > 1, DimensionMismatch if the
/// domains differ, DimensionCapExceeded if dim B + dim C exceeds the cap.
EpsPushout eps_pushout(const LinearMap& f, const LinearMap& g, const Rational& eps,
                       std::size_t dim_cap = kDefaultDimensionCap);

/// ‖(x,y)‖ in the apex evaluated directly from the decomposition formula as
/// one LP over (b, c, a). Only meaningful for eps > 0 (for eps = 0 pass the
/// coordinates before the quotient; the result is the quotient norm).
Rational pushout_formula_norm(const LinearMap& f, const LinearMap& g, const Rational& eps, const RatVec& x,
                              const RatVec& y);

/// The unique t: D → D′ with t∘f̄ = f′ and t∘ḡ = g′.
/// Throws NotEpsCommutative when ‖g′f − f′g‖ > eps, NormTooLarge when a
/// cocone leg has norm > 1, DimensionMismatch on incompatible spaces.
LinearMap pushout_mediator(const EpsPushout& P, const LinearMap& f_prime, const LinearMap& g_prime);

/// Whether the legs of P jointly span the apex, which makes mediators unique.
bool legs_jointly_span(const EpsPushout& P);

/// A finite chain K_0 → K_1 → … → K_N of maps of norm ≤ 1.
class Chain {
 public:
  /// Throws DimensionMismatch if the links do not compose, NormTooLarge if a
  /// link has norm > 1, EmptyInput if there are no spaces.
  explicit Chain(std::vector<LinearMap> links);
  /// A chain with a single space and no links.
  explicit Chain(PolyhedralSpace only);

  std::size_t length() const { return spaces_.size(); }
  std::size_t last() const { return spaces_.size() - 1; }
  const PolyhedralSpace& space(std::size_t i) const;
  const std::vector<LinearMap>& links() const { return links_; }
  /// k_{ij}: K_i → K_j for i <= j. Throws StageOutOfRange.
  const LinearMap& composite(std::size_t i, std::size_t j) const;

 private:
  std::vector<PolyhedralSpace> spaces_;
  std::vector<LinearMap> links_;
  std::vector<std::vector<LinearMap>> composites_;  // composites_[i][j - i]
};

/// d_j = ‖k_{ij}f − k_{ij}g‖ for j = i, …, N. Throws StageOutOfRange if
/// stage is past the end, DimensionMismatch if f, g do not land in K_stage.
std::vector<Rational> chain_colimit_distance(const Chain& ch, const LinearMap& f, const LinearMap& g,
                                             std::size_t stage);

struct StageFactorization {
  std::size_t stage = 0;
  LinearMap g;        // A → K_stage, ‖g‖ <= 1
  Rational distance;  // ‖k_{stage,N} g − f‖
  /// Optimal distance at every stage examined, in order 0..stage.
  std::vector<Rational> stage_optima;
};

/// min over g: A → K_i with ‖g‖ <= 1 of ‖k_{iN}g − f‖, with a minimizer.
std::pair<Rational, LinearMap> best_stage_approximation(const Chain& ch, const LinearMap& f, std::size_t stage);

/// The least stage i admitting g with ‖g‖ <= 1 and ‖k_{iN}g − f‖ <= eps.
/// f must land in the last space and have norm <= 1 (NormTooLarge otherwise).
StageFactorization factor_through_stage(const Chain& ch, const LinearMap& f, const Rational& eps);

/// f*/(1+eps′). If ‖f*‖ <= 1+eps′ the result has norm <= 1 and lies within
/// eps′ of f*.
LinearMap rescale_to_contraction(const LinearMap& f_star, const Rational& eps_prime);

}  // namespace polyban
