#include "polyban/space.hpp"

#include <algorithm>
#include <string>

#include "polyban/errors.hpp"
#include "polyban/matrix.hpp"

namespace polyban {

namespace {

void check_symmetric(const std::vector<RatVec>& sorted, const char* what) {
  for (const auto& v : sorted) {
    if (!std::binary_search(sorted.begin(), sorted.end(), -v)) {
      throw Error(ErrorCode::NotSymmetric, std::string(what) + " " + to_string(v) + " has no antipode");
    }
  }
}

void check_lengths(const std::vector<RatVec>& pts, std::size_t dim) {
  for (const auto& p : pts) {
    if (p.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "entry " + to_string(p) + " does not have " + std::to_string(dim) + " coordinates");
    }
  }
}

// Members of `candidates` that are tight (value 1) against a rank-`dim` subset
// of `duals`; i.e. the extreme points of conv(candidates) given the facets
// `duals` of that hull.
std::vector<RatVec> extreme_subset(const std::vector<RatVec>& candidates, const std::vector<RatVec>& duals,
                                   std::size_t dim) {
  std::vector<RatVec> out;
  for (const auto& c : candidates) {
    std::vector<RatVec> tight;
    for (const auto& d : duals) {
      if (dot(c, d) == Rational(1)) tight.push_back(d);
    }
    if (rank(tight, dim) == dim) out.push_back(c);
  }
  return out;
}

std::vector<Halfspace> polar_system(const std::vector<RatVec>& pts) {
  std::vector<Halfspace> hs;
  hs.reserve(pts.size());
  for (const auto& p : pts) hs.push_back({p, Rational(1)});
  return hs;
}

// Shared body of from_vertices / from_facets: `primary` are points of one
// description, the other is computed as the vertex set of its polar.
std::pair<std::vector<RatVec>, std::vector<RatVec>> close_descriptions(std::vector<RatVec> primary,
                                                                       std::size_t dim, std::size_t cap,
                                                                       const char* what) {
  check_lengths(primary, dim);
  sort_unique(primary);
  primary.erase(std::remove_if(primary.begin(), primary.end(), [](const RatVec& v) { return is_zero(v); }),
                primary.end());
  if (primary.empty()) throw Error(ErrorCode::EmptyInput, std::string("no nonzero ") + what);
  check_symmetric(primary, what);
  if (rank(primary, dim) < dim) {
    throw Error(ErrorCode::NotFullDimensional, std::string(what) + " do not span the space (seminorm)");
  }
  if (dim > cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<RatVec> secondary = vertex_enumerate(polar_system(primary), dim, cap);
  std::vector<RatVec> irredundant = extreme_subset(primary, secondary, dim);
  return {std::move(irredundant), std::move(secondary)};
}

}  // namespace

PolyhedralSpace::PolyhedralSpace() : data_(std::make_shared<const Data>()) {}

PolyhedralSpace PolyhedralSpace::from_trusted(std::size_t dim, std::vector<RatVec> vertices,
                                              std::vector<RatVec> facets) {
  sort_unique(vertices);
  sort_unique(facets);
  auto d = std::make_shared<Data>();
  d->dim = dim;
  d->vertices = std::move(vertices);
  d->facets = std::move(facets);
  return PolyhedralSpace(std::shared_ptr<const Data>(std::move(d)));
}

PolyhedralSpace PolyhedralSpace::from_vertices(std::vector<RatVec> vertices, std::size_t dim, std::size_t dim_cap) {
  if (dim == 0) return zero();
  auto [verts, facets] = close_descriptions(std::move(vertices), dim, dim_cap, "vertices");
  return from_trusted(dim, std::move(verts), std::move(facets));
}

PolyhedralSpace PolyhedralSpace::from_facets(std::vector<RatVec> functionals, std::size_t dim, std::size_t dim_cap) {
  if (dim == 0) return zero();
  auto [facets, verts] = close_descriptions(std::move(functionals), dim, dim_cap, "facet functionals");
  return from_trusted(dim, std::move(verts), std::move(facets));
}

PolyhedralSpace PolyhedralSpace::real_line() { return ell_one(1); }

PolyhedralSpace PolyhedralSpace::ell_one(std::size_t n) {
  if (n == 0) return zero();
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < n; ++i) {
    verts.push_back(unit_vector(n, i));
    verts.push_back(-unit_vector(n, i));
  }
  std::vector<RatVec> facets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVec s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
    facets.push_back(std::move(s));
  }
  return from_trusted(n, std::move(verts), std::move(facets));
}

PolyhedralSpace PolyhedralSpace::ell_infinity(std::size_t n) {
  PolyhedralSpace one = ell_one(n);
  return from_trusted(n, one.facets(), one.vertices());
}

Rational PolyhedralSpace::norm(const RatVec& x) const {
  if (x.size() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(x.size()) +
                                                  " in a space of dimension " + std::to_string(dim()));
  }
  Rational best;
  for (const auto& phi : facets()) {
    Rational v = dot(phi, x);
    if (v > best) best = std::move(v);
  }
  return best;
}

Rational PolyhedralSpace::coordinate_bound() const {
  Rational m;
  for (const auto& v : vertices())
    for (const auto& x : v) m = max(m, abs(x));
  return m;
}

bool operator==(const PolyhedralSpace& a, const PolyhedralSpace& b) {
  if (a.data_ == b.data_) return true;
  return a.dim() == b.dim() && a.vertices() == b.vertices();
}

Vector::Vector(PolyhedralSpace space, RatVec coords) : space_(std::move(space)), coords_(std::move(coords)) {
  if (coords_.size() != space_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match space dimension");
  }
}

Rational norm(const PolyhedralSpace& K, const Vector& v) {
  if (!(v.space() == K)) throw Error(ErrorCode::DimensionMismatch, "vector belongs to a different space");
  return K.norm(v.coords());
}

PolyhedralSpace dual_space(const PolyhedralSpace& K) {
  return PolyhedralSpace::from_trusted(K.dim(), K.facets(), K.vertices());
}

PolyhedralSpace direct_sum(const PolyhedralSpace& K, const PolyhedralSpace& L, SumKind kind) {
  if (K.dim() == 0) return L;
  if (L.dim() == 0) return K;
  const std::size_t n = K.dim() + L.dim();
  auto embed_left = [&](const RatVec& x) {
    RatVec out(n);
    std::copy(x.begin(), x.end(), out.begin());
    return out;
  };
  auto embed_right = [&](const RatVec& y) {
    RatVec out(n);
    std::copy(y.begin(), y.end(), out.begin() + static_cast<std::ptrdiff_t>(K.dim()));
    return out;
  };
  auto pairs = [&](const std::vector<RatVec>& xs, const std::vector<RatVec>& ys) {
    std::vector<RatVec> out;
    out.reserve(xs.size() * ys.size());
    for (const auto& x : xs)
      for (const auto& y : ys) out.push_back(embed_left(x) + embed_right(y));
    return out;
  };
  auto axes = [&](const std::vector<RatVec>& xs, const std::vector<RatVec>& ys) {
    std::vector<RatVec> out;
    for (const auto& x : xs) out.push_back(embed_left(x));
    for (const auto& y : ys) out.push_back(embed_right(y));
    return out;
  };
  if (kind == SumKind::Sum) {
    return PolyhedralSpace::from_trusted(n, axes(K.vertices(), L.vertices()), pairs(K.facets(), L.facets()));
  }
  return PolyhedralSpace::from_trusted(n, pairs(K.vertices(), L.vertices()), axes(K.facets(), L.facets()));
}

RatVec tensor_vector(const RatVec& u, const RatVec& v) {
  RatVec out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u)
    for (const auto& b : v) out.push_back(a * b);
  return out;
}

PolyhedralSpace projective_tensor(const PolyhedralSpace& K, const PolyhedralSpace& L, std::size_t dim_cap) {
  const std::size_t n = K.dim() * L.dim();
  if (n > dim_cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "tensor dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dim_cap));
  }
  if (n == 0) return PolyhedralSpace::zero();
  std::vector<RatVec> pts;
  pts.reserve(K.vertices().size() * L.vertices().size());
  for (const auto& u : K.vertices())
    for (const auto& v : L.vertices()) pts.push_back(tensor_vector(u, v));
  return PolyhedralSpace::from_vertices(std::move(pts), n, dim_cap);
}

PolyhedralSpace induced_subspace(const PolyhedralSpace& L, const std::vector<RatVec>& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return PolyhedralSpace::zero();
  check_lengths(basis, L.dim());
  if (rank(basis, L.dim()) < k) throw Error(ErrorCode::NotFullDimensional, "subspace basis is dependent");
  Matrix p = Matrix::from_columns(basis, L.dim());
  std::vector<RatVec> pulled;
  pulled.reserve(L.facets().size());
  for (const auto& phi : L.facets()) pulled.push_back(p.apply_left(phi));
  return PolyhedralSpace::from_facets(std::move(pulled), k);
}

}  // namespace polyban
