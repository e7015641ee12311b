#include "polyban/purity.hpp"

#include <string>

#include "operator_lp.hpp"
#include "polyban/errors.hpp"
#include "polyban/lp.hpp"

namespace polyban {

Embedding::Embedding(LinearMap f) : map_(std::move(f)) {
  const IsometryDefect& d = map_.isometry_defect();
  if (!d.is_isometry()) {
    throw Error(ErrorCode::NotAnIsometry,
                "embedding has isometry defect (" + d.upper.str() + ", " + d.lower.str() + ")");
  }
}

std::vector<RatVec> Embedding::image_basis() const {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < map_.matrix().cols(); ++i) out.push_back(map_.matrix().column(i));
  return out;
}

const char* defect_kind_name(DefectKind kind) {
  switch (kind) {
    case DefectKind::Ideal: return "ideal";
    case DefectKind::Retraction: return "retraction";
    case DefectKind::Square: return "square";
    case DefectKind::Saturation: return "saturation";
    case DefectKind::Injectivity: return "injectivity";
  }
  return "unknown";
}

DefectReport ideal_defect(const Embedding& e) {
  const PolyhedralSpace& K = e.sub();
  const PolyhedralSpace& L = e.ambient();
  if (K.dim() == 0) return {Rational(0), LinearMap::zero(L, K), DefectKind::Ideal, std::nullopt};

  detail::MatrixVar T{0, K.dim(), L.dim()};
  const std::size_t s = T.size();
  LinearProgram lp(s + 1);
  RatVec obj(s + 1);
  obj[s] = 1;
  lp.set_objective(std::move(obj), Sense::Minimize);
  detail::add_matrix_equations(lp, T, e.map().matrix(), Matrix::identity(K.dim()));
  detail::add_ball_constraints(lp, T, nullptr, nullptr, K, L.vertices(), s, 0);
  LPResult r = lp_solve(lp);
  if (!r.optimal()) throw std::logic_error("ideal_defect: extension program not optimal");
  return {positive_part(r.optimum - Rational(1)), LinearMap(L, K, T.extract(r.witness)), DefectKind::Ideal,
          std::nullopt};
}

DefectReport factorization_defect(const LinearMap& g, const LinearMap& u, DefectKind kind) {
  const PolyhedralSpace& A = g.domain();
  const PolyhedralSpace& B = g.codomain();
  const PolyhedralSpace& K = u.codomain();
  if (!(u.domain() == A)) throw Error(ErrorCode::DimensionMismatch, "g and u must share a domain");
  detail::MatrixVar T{0, K.dim(), B.dim()};
  const std::size_t s = T.size();
  LinearProgram lp(s + 1);
  RatVec obj(s + 1);
  obj[s] = 1;
  lp.set_objective(std::move(obj), Sense::Minimize);
  lp.add_lower_bound(s, 0);
  detail::add_ball_constraints(lp, T, nullptr, nullptr, K, B.vertices(), std::nullopt, 1);
  detail::add_ball_constraints(lp, T, &g.matrix(), &u.matrix(), K, A.vertices(), s, 0);
  LPResult r = lp_solve(lp);
  if (!r.optimal()) throw std::logic_error("factorization_defect: program not optimal");
  return {r.optimum, LinearMap(B, K, T.extract(r.witness)), kind, std::nullopt};
}

DefectReport retraction_defect(const LinearMap& f) {
  if (f.operator_norm() > Rational(1)) {
    throw Error(ErrorCode::NormTooLarge, "map has operator norm " + f.operator_norm().str() + " > 1");
  }
  return factorization_defect(f, LinearMap::identity(f.domain()), DefectKind::Retraction);
}

DefectReport pure_square_defect(const Embedding& e, const LinearMap& g, const LinearMap& u, const LinearMap& v,
                                const Rational& commute_tol) {
  if (!(u.codomain() == e.sub()) || !(v.codomain() == e.ambient()) || !(g.codomain() == v.domain()) ||
      !(g.domain() == u.domain())) {
    throw Error(ErrorCode::DimensionMismatch, "square maps do not line up with the embedding");
  }
  const Rational gap = (compose(e.map(), u) - compose(v, g)).operator_norm();
  if (gap > commute_tol) {
    throw Error(ErrorCode::SquareNotCommuting, "‖f∘u − v∘g‖ = " + gap.str());
  }
  return factorization_defect(g, u, DefectKind::Square);
}

Intersection intersect_images(const LinearMap& f, const LinearMap& b) {
  if (!(f.codomain() == b.codomain())) throw Error(ErrorCode::DimensionMismatch, "maps land in different spaces");
  const std::size_t nk = f.domain().dim();
  const std::size_t nb = b.domain().dim();
  // f α = b β  ⟺  [f | −b] (α, β) = 0.
  Intersection out;
  for (const auto& z : null_space(hconcat(f.matrix(), (-1) * b.matrix()))) {
    out.in_sub.emplace_back(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(nk));
    out.in_other.emplace_back(z.begin() + static_cast<std::ptrdiff_t>(nk), z.begin() + static_cast<std::ptrdiff_t>(nk + nb));
  }
  return out;
}

UExtensionCheck verify_u_extension_candidate(const Embedding& e, const LinearMap& b, const LinearMap& t,
                                             const Rational& eps) {
  if (!(t.domain() == b.domain()) || !(t.codomain() == e.sub()) || !(b.codomain() == e.ambient())) {
    throw Error(ErrorCode::DimensionMismatch, "candidate must map B into K, with B and K inside the same L");
  }
  UExtensionCheck out;
  const Intersection inter = intersect_images(e.map(), b);
  out.fixes_intersection = true;
  for (std::size_t i = 0; i < inter.in_sub.size(); ++i) {
    if (t.apply(inter.in_other[i]) != inter.in_sub[i]) {
      out.fixes_intersection = false;
      break;
    }
  }
  out.defect = t.isometry_defect();
  out.strong_isometry = out.defect.is_strong_eps_isometry(eps);
  return out;
}

Rational basis_coordinate_bound(const PolyhedralSpace& B, const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorCode::PreconditionViolated, "basis is not invertible");
  Rational M;
  for (const auto& v : B.vertices())
    for (const auto& a : inv->apply(v)) M = max(M, abs(a));
  return M;
}

BasisRepair repair_fix_basis(const LinearMap& t_prime, const Matrix& basis, const std::vector<RatVec>& fixed_targets,
                             const Rational& eps) {
  const PolyhedralSpace& B = t_prime.domain();
  const PolyhedralSpace& K = t_prime.codomain();
  const std::size_t n = B.dim();
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis must be n x n");
  if (fixed_targets.size() > n) throw Error(ErrorCode::DimensionMismatch, "more fixed targets than basis vectors");
  for (const auto& y : fixed_targets)
    if (y.size() != K.dim()) throw Error(ErrorCode::DimensionMismatch, "fixed target has the wrong length");
  if (eps <= Rational(0)) throw Error(ErrorCode::PreconditionViolated, "eps must be positive");
  auto inv = inverse(basis);
  if (!inv) throw Error(ErrorCode::PreconditionViolated, "basis is not invertible");

  if (n == 0) return {t_prime, Rational(0), Rational(0), Rational(0)};
  const Rational M = basis_coordinate_bound(B, basis);
  const Rational delta = eps / (Rational(n) * M);
  for (std::size_t i = 0; i < fixed_targets.size(); ++i) {
    const Rational miss = K.norm(t_prime.apply(basis.column(i)) - fixed_targets[i]);
    if (miss > delta) {
      throw Error(ErrorCode::PreconditionViolated, "basis vector " + std::to_string(i + 1) + " is moved by " +
                                                       miss.str() + " > delta = " + delta.str());
    }
  }
  // Images of the basis vectors, then back to the unit vector basis.
  std::vector<RatVec> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(i < fixed_targets.size() ? fixed_targets[i] : t_prime.apply(basis.column(i)));
  LinearMap t(B, K, Matrix::from_columns(images, K.dim()) * *inv);
  Rational distance = (t - t_prime).operator_norm();
  return {std::move(t), delta, M, std::move(distance)};
}

BasisRepair repair_fix_basis(const LinearMap& t_prime, const std::vector<RatVec>& fixed_targets, const Rational& eps) {
  return repair_fix_basis(t_prime, Matrix::identity(t_prime.domain().dim()), fixed_targets, eps);
}

}  // namespace polyban
