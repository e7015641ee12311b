#include "polyban/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "polyban/errors.hpp"
#include "polyban/lp.hpp"
#include "polyban/matrix.hpp"

namespace polyban {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Ray {
  RatVec v;
  Bits tight;  // processed rows with row · v == 0
};

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

void normalize_ray(RatVec& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    Rational s = Rational(1) / abs(x);
    for (auto& y : v) y *= s;
    return;
  }
}

void check_cap(std::size_t dim, std::size_t cap) {
  if (dim > cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "ambient dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Halfspace canonical(Halfspace h) {
  if (h.offset.sign() > 0) {
    Rational s = Rational(1) / h.offset;
    h.normal = s * h.normal;
    h.offset = 1;
    return h;
  }
  for (const auto& x : h.normal) {
    if (x.is_zero()) continue;
    Rational s = Rational(1) / abs(x);
    h.normal = s * h.normal;
    h.offset *= s;
    break;
  }
  return h;
}

void sort_unique(std::vector<RatVec>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

long affine_dimension(const std::vector<RatVec>& points, std::size_t dim) {
  if (points.empty()) return -1;
  std::vector<RatVec> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<long>(rank(diffs, dim));
}

std::vector<RatVec> cone_extreme_rays(const std::vector<RatVec>& rows, std::size_t dim) {
  auto basis_idx = independent_subset(rows, dim);
  if (basis_idx.size() < dim) return {};

  const std::size_t words = (rows.size() + 63) / 64;
  std::vector<RatVec> g0;
  g0.reserve(dim);
  for (auto i : basis_idx) g0.push_back(rows[i]);
  auto inv = inverse(Matrix::from_rows(g0, dim));
  if (!inv) throw std::logic_error("cone_extreme_rays: independent rows yielded singular matrix");

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray r{inv->column(j), Bits(words)};
    for (std::size_t k = 0; k < dim; ++k) {
      if (k != j) set_bit(r.tight, basis_idx[k]);
    }
    normalize_ray(r.v);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto i : basis_idx) processed[i] = true;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rows[i], rays[k].v);
      if (val[k].sign() > 0) pos.push_back(k);
      else if (val[k].sign() < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (val[k].is_zero()) set_bit(rays[k].tight, i);
      }
      continue;
    }

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k].sign() < 0) continue;
      Ray r = rays[k];
      if (val[k].is_zero()) set_bit(r.tight, i);
      next.push_back(std::move(r));
    }

    Bits common(words);
    for (auto p : pos) {
      for (auto q : neg) {
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].tight[w] & rays[q].tight[w];
        if (popcount(common) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (subset_of(common, rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[q]; the combination is tight on row i.
        Ray r{val[p] * rays[q].v - val[q] * rays[p].v, common};
        set_bit(r.tight, i);
        normalize_ray(r.v);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  sort_unique(out);
  return out;
}

std::vector<RatVec> vertex_enumerate(const std::vector<Halfspace>& facets, std::size_t dim, std::size_t dim_cap) {
  check_cap(dim, dim_cap);
  for (const auto& h : facets) {
    if (h.normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "facet normal has wrong length");
  }
  if (dim == 0) {
    for (const auto& h : facets) {
      if (h.offset.sign() < 0) throw Error(ErrorCode::DegenerateSystem, "empty polytope");
    }
    return {RatVec{}};
  }

  // Homogenize: offset·t - normal·x >= 0 and t >= 0, variables (x, t).
  std::vector<RatVec> rows;
  rows.reserve(facets.size() + 1);
  RatVec t_row(dim + 1);
  t_row[dim] = 1;
  rows.push_back(std::move(t_row));
  for (const auto& h : facets) {
    RatVec r(dim + 1);
    for (std::size_t k = 0; k < dim; ++k) r[k] = -h.normal[k];
    r[dim] = h.offset;
    rows.push_back(std::move(r));
  }

  auto rays = cone_extreme_rays(rows, dim + 1);
  if (rays.empty()) {
    // Nontrivial lineality: either a line lies in the polytope or it is empty.
    LinearProgram probe(dim);
    for (const auto& h : facets) probe.add_constraint(h.normal, Relation::LessEqual, h.offset);
    if (lp_solve(probe).optimal()) throw Error(ErrorCode::UnboundedPolytope, "polytope contains a line");
    throw Error(ErrorCode::DegenerateSystem, "empty polytope");
  }

  std::vector<RatVec> vertices;
  bool recession = false;
  for (const auto& r : rays) {
    if (r[dim].is_zero()) {
      recession = true;
      continue;
    }
    Rational s = Rational(1) / r[dim];
    RatVec x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim));
    for (auto& c : x) c *= s;
    vertices.push_back(std::move(x));
  }
  if (vertices.empty()) throw Error(ErrorCode::DegenerateSystem, "empty polytope");
  if (recession) throw Error(ErrorCode::UnboundedPolytope, "polytope has a recession direction");
  sort_unique(vertices);
  if (affine_dimension(vertices, dim) != static_cast<long>(dim)) {
    throw Error(ErrorCode::DegenerateSystem, "polytope is not full-dimensional");
  }
  return vertices;
}

std::vector<Halfspace> convex_hull_facets(const std::vector<RatVec>& points, std::size_t dim, std::size_t dim_cap) {
  check_cap(dim, dim_cap);
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  }
  std::vector<RatVec> pts(points);
  sort_unique(pts);
  if (pts.empty()) throw Error(ErrorCode::DegenerateSystem, "no points");
  if (dim == 0) return {};
  if (affine_dimension(pts, dim) != static_cast<long>(dim)) {
    throw Error(ErrorCode::DegenerateSystem, "hull is not full-dimensional");
  }

  RatVec centroid(dim);
  for (const auto& p : pts) centroid = centroid + p;
  centroid = Rational(1) / Rational(static_cast<long>(pts.size())) * centroid;

  // Facets of the hull are the vertices of the polar about an interior point.
  std::vector<Halfspace> polar;
  polar.reserve(pts.size());
  for (const auto& p : pts) polar.push_back({p - centroid, Rational(1)});
  auto ys = vertex_enumerate(polar, dim, dim_cap);

  std::vector<Halfspace> facets;
  facets.reserve(ys.size());
  for (auto& y : ys) {
    Rational offset = Rational(1) + dot(y, centroid);
    facets.push_back(canonical({std::move(y), std::move(offset)}));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

}  // namespace polyban
