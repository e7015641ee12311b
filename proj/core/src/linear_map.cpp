#include "polyban/linear_map.hpp"

#include <string>

#include "polyban/errors.hpp"
#include "polyban/lp.hpp"

namespace polyban {

bool IsometryDefect::is_strong_eps_isometry(const Rational& eps) const {
  // ‖f‖ <= 1+eps  and  min_sphere ‖fx‖ >= 1/(1+eps), i.e. lower <= eps/(1+eps).
  return upper <= eps && lower <= eps / (Rational(1) + eps);
}

LinearMap::LinearMap(PolyhedralSpace domain, PolyhedralSpace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)),
      cache_(std::make_shared<Cache>()) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                    " but the map goes from dimension " + std::to_string(domain_.dim()) + " to " +
                    std::to_string(codomain_.dim()));
  }
}

LinearMap LinearMap::identity(const PolyhedralSpace& K) { return LinearMap(K, K, Matrix::identity(K.dim())); }

LinearMap LinearMap::zero(const PolyhedralSpace& domain, const PolyhedralSpace& codomain) {
  return LinearMap(domain, codomain, Matrix(codomain.dim(), domain.dim()));
}

Vector LinearMap::apply(const Vector& x) const {
  if (!(x.space() == domain_)) throw Error(ErrorCode::DimensionMismatch, "vector is not in the map's domain");
  return Vector(codomain_, matrix_.apply(x.coords()));
}

LinearMap LinearMap::scaled(const Rational& s) const { return LinearMap(domain_, codomain_, s * matrix_); }

const Rational& LinearMap::operator_norm() const {
  std::call_once(cache_->norm_once, [this] { cache_->norm = polyban::operator_norm(*this); });
  return cache_->norm;
}

const IsometryDefect& LinearMap::isometry_defect() const {
  std::call_once(cache_->defect_once, [this] { cache_->defect = polyban::isometry_defect(*this); });
  return cache_->defect;
}

namespace {
void check_same_spaces(const LinearMap& a, const LinearMap& b) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
    throw Error(ErrorCode::DimensionMismatch, "maps act between different spaces");
  }
}
}  // namespace

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  check_same_spaces(a, b);
  return LinearMap(a.domain_, a.codomain_, a.matrix_ + b.matrix_);
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  check_same_spaces(a, b);
  return LinearMap(a.domain_, a.codomain_, a.matrix_ - b.matrix_);
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
}

Rational operator_norm(const LinearMap& f) {
  Rational best;
  for (const auto& v : f.domain().vertices()) best = max(best, f.codomain().norm(f.apply(v)));
  return best;
}

Rational min_sphere_norm(const LinearMap& f) {
  const PolyhedralSpace& dom = f.domain();
  const PolyhedralSpace& cod = f.codomain();
  const std::size_t n = dom.dim();
  if (n == 0) return 1;
  if (cod.dim() == 0) return 0;

  // Pull the codomain facets back to the domain once.
  std::vector<RatVec> pulled;
  pulled.reserve(cod.facets().size());
  for (const auto& psi : cod.facets()) pulled.push_back(f.matrix().apply_left(psi));

  std::optional<Rational> best;
  for (const auto& phi : dom.facets()) {
    // ‖f(-x)‖ = ‖fx‖, so the facet -φ gives the same minimum as φ.
    if (phi < -phi) continue;
    // min s  s.t.  x in ball, φ(x) = 1, ψ(fx) <= s for every codomain facet ψ.
    LinearProgram lp(n + 1);
    RatVec obj(n + 1);
    obj[n] = 1;
    lp.set_objective(std::move(obj), Sense::Minimize);
    for (const auto& other : dom.facets()) {
      if (other == phi) continue;
      RatVec row(other);
      row.push_back(0);
      lp.add_constraint(std::move(row), Relation::LessEqual, 1);
    }
    RatVec on_facet(phi);
    on_facet.push_back(0);
    lp.add_constraint(std::move(on_facet), Relation::Equal, 1);
    for (const auto& q : pulled) {
      RatVec row(q);
      row.push_back(-1);
      lp.add_constraint(std::move(row), Relation::LessEqual, 0);
    }
    LPResult r = lp_solve(lp);
    if (!r.optimal()) throw std::logic_error("min_sphere_norm: facet program not optimal");
    if (!best || r.optimum < *best) best = r.optimum;
  }
  return *best;
}

IsometryDefect isometry_defect(const LinearMap& f) {
  if (f.domain().dim() == 0) return {};
  IsometryDefect d;
  d.upper = positive_part(f.operator_norm() - Rational(1));
  d.lower = positive_part(Rational(1) - min_sphere_norm(f));
  return d;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compose: codomain of the first map is not the domain of the second");
  }
  return LinearMap(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

LinearMap tensor_map(const PolyhedralSpace& K, const LinearMap& f, std::size_t dim_cap) {
  PolyhedralSpace dom = projective_tensor(K, f.domain(), dim_cap);
  PolyhedralSpace cod = projective_tensor(K, f.codomain(), dim_cap);
  return LinearMap(std::move(dom), std::move(cod), kronecker(Matrix::identity(K.dim()), f.matrix()));
}

}  // namespace polyban
