#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "polyban/matrix.hpp"
#include "polyban/space.hpp"

namespace polyban {

/// How far a map is from preserving norms:
///   upper = max over the unit ball of (‖fx‖ − ‖x‖)_+
///   lower = max over the unit ball of (‖x‖ − ‖fx‖)_+
struct IsometryDefect {
  Rational upper;
  Rational lower;

  Rational max() const { return polyban::max(upper, lower); }
  bool is_isometry() const { return upper.is_zero() && lower.is_zero(); }
  /// |‖fx‖ − ‖x‖| <= eps on the unit ball.
  bool is_eps_isometry(const Rational& eps) const { return max() <= eps; }
  /// (1+eps)^-1 ‖x‖ <= ‖fx‖ <= (1+eps) ‖x‖.
  bool is_strong_eps_isometry(const Rational& eps) const;

  friend bool operator==(const IsometryDefect&, const IsometryDefect&) = default;
};

/// A linear map between polyhedral spaces, stored as a codomain-dim ×
/// domain-dim rational matrix. No bound on the norm is imposed. The operator
/// norm and isometry defect are computed on first use and cached; copies
/// share the cache.
class LinearMap {
 public:
  /// Throws DimensionMismatch if the matrix shape does not match.
  LinearMap(PolyhedralSpace domain, PolyhedralSpace codomain, Matrix matrix);

  static LinearMap identity(const PolyhedralSpace& K);
  static LinearMap zero(const PolyhedralSpace& domain, const PolyhedralSpace& codomain);

  const PolyhedralSpace& domain() const { return domain_; }
  const PolyhedralSpace& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  RatVec apply(const RatVec& x) const { return matrix_.apply(x); }
  Vector apply(const Vector& x) const;

  LinearMap scaled(const Rational& s) const;

  const Rational& operator_norm() const;
  const IsometryDefect& isometry_defect() const;

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  struct Cache {
    std::once_flag norm_once;
    Rational norm;
    std::once_flag defect_once;
    IsometryDefect defect;
  };

  PolyhedralSpace domain_;
  PolyhedralSpace codomain_;
  Matrix matrix_;
  std::shared_ptr<Cache> cache_;
};

/// max over the domain's ball vertices of the codomain norm of the image.
Rational operator_norm(const LinearMap& f);

/// Exact isometry defect. The lower part minimizes ‖fx‖ over each facet of
/// the domain ball with one epigraph LP per facet pair ±φ.
IsometryDefect isometry_defect(const LinearMap& f);

/// min of ‖fx‖ over the unit sphere of the domain (0 for a zero domain
/// would be vacuous; returns 1 there so that the lower defect vanishes).
Rational min_sphere_norm(const LinearMap& f);

/// g ∘ f. Throws DimensionMismatch unless f.codomain() == g.domain().
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// id_K ⊗ f : K ⊗ A → K ⊗ B between projective tensor products.
LinearMap tensor_map(const PolyhedralSpace& K, const LinearMap& f, std::size_t dim_cap = kDefaultDimensionCap);

}  // namespace polyban
