#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "polyban/geometry.hpp"
#include "polyban/rational.hpp"

namespace polyban {

/// A finite-dimensional real normed space whose unit ball is a symmetric
/// full-dimensional polytope. Both descriptions of the ball are kept:
/// `vertices()` are its extreme points and `facets()` the functionals φ with
/// ball = { x : φ(x) <= 1 for all φ }. Both lists are sorted, so two spaces
/// compare equal exactly when their balls coincide.
///
/// The handle is immutable and cheap to copy; copies share storage.
class PolyhedralSpace {
 public:
  /// The zero-dimensional space {0}.
  PolyhedralSpace();

  /// Throws EmptyInput, NotSymmetric, NotFullDimensional,
  /// DimensionCapExceeded.
  static PolyhedralSpace from_vertices(std::vector<RatVec> vertices, std::size_t dim,
                                       std::size_t dim_cap = kDefaultDimensionCap);
  /// Facet functionals (offset 1 implied). Redundant functionals are dropped.
  static PolyhedralSpace from_facets(std::vector<RatVec> functionals, std::size_t dim,
                                     std::size_t dim_cap = kDefaultDimensionCap);

  static PolyhedralSpace zero() { return PolyhedralSpace(); }
  static PolyhedralSpace real_line();
  static PolyhedralSpace ell_one(std::size_t n);
  static PolyhedralSpace ell_infinity(std::size_t n);

  std::size_t dim() const { return data_->dim; }
  const std::vector<RatVec>& vertices() const { return data_->vertices; }
  const std::vector<RatVec>& facets() const { return data_->facets; }

  /// Minkowski gauge of the ball: max over facets of φ(x).
  Rational norm(const RatVec& x) const;

  /// max |x_i| over the ball; the coordinate bound of the standard basis.
  Rational coordinate_bound() const;

  friend bool operator==(const PolyhedralSpace& a, const PolyhedralSpace& b);

  /// Assembles a space from descriptions already known to be polar to each
  /// other. Used by constructions whose ball is known in closed form.
  static PolyhedralSpace from_trusted(std::size_t dim, std::vector<RatVec> vertices, std::vector<RatVec> facets);

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<RatVec> vertices;
    std::vector<RatVec> facets;
  };
  explicit PolyhedralSpace(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// An element of a specific space.
class Vector {
 public:
  Vector(PolyhedralSpace space, RatVec coords);

  const PolyhedralSpace& space() const { return space_; }
  const RatVec& coords() const { return coords_; }

 private:
  PolyhedralSpace space_;
  RatVec coords_;
};

/// Throws DimensionMismatch when v does not belong to K.
Rational norm(const PolyhedralSpace& K, const Vector& v);

/// The dual space: its ball is the polar of K's ball, so vertices and facets
/// swap roles.
PolyhedralSpace dual_space(const PolyhedralSpace& K);

enum class SumKind {
  Sum,  // ‖(x,y)‖ = ‖x‖ + ‖y‖, the coproduct
  Max,  // ‖(x,y)‖ = max(‖x‖, ‖y‖), the product
};

PolyhedralSpace direct_sum(const PolyhedralSpace& K, const PolyhedralSpace& L, SumKind kind);

/// Projective tensor product, coordinates ordered as i * dim L + j.
/// Throws DimensionCapExceeded when dim K · dim L exceeds the cap.
PolyhedralSpace projective_tensor(const PolyhedralSpace& K, const PolyhedralSpace& L,
                                  std::size_t dim_cap = kDefaultDimensionCap);

/// The subspace spanned by `basis` (vectors of L) with the induced norm, in
/// coordinates relative to `basis`. Throws NotFullDimensional if the basis
/// is linearly dependent.
PolyhedralSpace induced_subspace(const PolyhedralSpace& L, const std::vector<RatVec>& basis);

RatVec tensor_vector(const RatVec& u, const RatVec& v);

}  // namespace polyban
