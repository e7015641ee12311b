#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyban/linear_map.hpp"

namespace polyban {

/// An isometric embedding f: K → L.
class Embedding {
 public:
  /// Throws NotAnIsometry unless f has isometry defect (0, 0).
  explicit Embedding(LinearMap f);

  const LinearMap& map() const { return map_; }
  const PolyhedralSpace& sub() const { return map_.domain(); }
  const PolyhedralSpace& ambient() const { return map_.codomain(); }
  /// Basis of f[K] in L coordinates: the images of the unit vectors of K.
  std::vector<RatVec> image_basis() const;

 private:
  LinearMap map_;
};

enum class DefectKind { Ideal, Retraction, Square, Saturation, Injectivity };

const char* defect_kind_name(DefectKind kind);

/// An optimized quantity together with the map attaining it.
struct DefectReport {
  Rational value;
  std::optional<LinearMap> witness;
  DefectKind kind = DefectKind::Ideal;
  /// The input at which a worst case was attained, when the value is a max.
  std::optional<LinearMap> probe;
};

/// min{‖t∘g − u‖ : t: B → K, ‖t‖ <= 1} for g: A → B and u: A → K, with a
/// minimizing t as witness.
DefectReport factorization_defect(const LinearMap& g, const LinearMap& u, DefectKind kind);

/// (min{‖t‖ : t: L → K, t∘f = id_K} − 1)_+. The embedding is an ideal
/// (equivalently pure) iff the value is 0; the witness attains the minimum.
DefectReport ideal_defect(const Embedding& e);

/// min{‖s∘f − id_K‖ : s: L → K, ‖s‖ <= 1}. Zero iff f is a split
/// monomorphism. Throws NormTooLarge if ‖f‖ > 1.
DefectReport retraction_defect(const LinearMap& f);

/// For the square f∘u = v∘g with f = e.map(), g: A → B, u: A → K, v: B → L:
/// min{‖t∘g − u‖ : t: B → K, ‖t‖ <= 1}. Throws SquareNotCommuting when
/// ‖f∘u − v∘g‖ > commute_tol.
DefectReport pure_square_defect(const Embedding& e, const LinearMap& g, const LinearMap& u, const LinearMap& v,
                                const Rational& commute_tol = 0);

/// Basis of K ∩ B for embeddings f: K → L and b: B → L, as pairs of
/// coordinates (in K, in B) describing the same point of L.
struct Intersection {
  std::vector<RatVec> in_sub;
  std::vector<RatVec> in_other;
};
Intersection intersect_images(const LinearMap& f, const LinearMap& b);

struct UExtensionCheck {
  bool fixes_intersection = false;
  IsometryDefect defect;
  bool strong_isometry = false;
  bool accepted() const { return fixes_intersection && strong_isometry; }
};

/// Checks whether t: B → K fixes K ∩ B pointwise and is a strong
/// eps-isometry, for embeddings e: K → L and b: B → L.
/// Throws DimensionMismatch if the spaces do not line up.
UExtensionCheck verify_u_extension_candidate(const Embedding& e, const LinearMap& b, const LinearMap& t,
                                             const Rational& eps);

struct BasisRepair {
  LinearMap t;
  Rational delta;     // eps / (n M)
  Rational M;         // largest basis coefficient over the unit ball of B
  Rational distance;  // ‖t − t′‖, recomputed exactly
};

/// Given t′: B → K, a basis e_1..e_n of B (columns of basis) and targets
/// for e_1..e_m in K, returns t with t(e_i) = target_i for i <= m and
/// t(e_i) = t′(e_i) otherwise. Requires ‖t′(e_i) − target_i‖ <= eps/(n M);
/// throws PreconditionViolated otherwise. Then ‖t − t′‖ <= eps.
BasisRepair repair_fix_basis(const LinearMap& t_prime, const Matrix& basis, const std::vector<RatVec>& fixed_targets,
                             const Rational& eps);

/// repair_fix_basis with the unit vector basis of B.
BasisRepair repair_fix_basis(const LinearMap& t_prime, const std::vector<RatVec>& fixed_targets, const Rational& eps);

/// max over the unit ball of B of the largest coefficient in the given basis.
Rational basis_coordinate_bound(const PolyhedralSpace& B, const Matrix& basis);

}  // namespace polyban
