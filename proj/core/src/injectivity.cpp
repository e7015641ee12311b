#include "polyban/injectivity.hpp"

#include <string>

#include "operator_lp.hpp"
#include "polyban/errors.hpp"
#include "polyban/geometry.hpp"

namespace polyban {

namespace {

void require_contraction(const LinearMap& m, const std::string& what) {
  if (m.operator_norm() > Rational(1)) {
    throw Error(ErrorCode::NormTooLarge, what + " has operator norm " + m.operator_norm().str() + " > 1");
  }
}

void require_isometry(const LinearMap& m, const std::string& what) {
  if (!m.isometry_defect().is_isometry()) throw Error(ErrorCode::NotAnIsometry, what + " is not an isometry");
}

}  // namespace

void MorphismCatalog::add(std::string name, LinearMap h) {
  require_contraction(h, name);
  const bool iso = h.isometry_defect().is_isometry();
  entries_.push_back({std::move(name), std::move(h), iso});
}

std::vector<CatalogEntry> MorphismCatalog::isometries() const {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries_)
    if (e.isometry) out.push_back(e);
  return out;
}

std::vector<LinearMap> operator_ball_vertices(const PolyhedralSpace& A, const PolyhedralSpace& K,
                                              std::size_t dim_cap) {
  const std::size_t n = A.dim() * K.dim();
  if (n > dim_cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "operator ball has dimension " + std::to_string(n) + " > cap " + std::to_string(dim_cap));
  }
  if (n == 0) return {LinearMap::zero(A, K)};
  detail::MatrixVar F{0, K.dim(), A.dim()};
  std::vector<Halfspace> halfspaces;
  for (const auto& v : A.vertices()) {
    for (const auto& psi : K.facets()) {
      RatVec normal(n);
      for (std::size_t k = 0; k < K.dim(); ++k)
        for (std::size_t i = 0; i < A.dim(); ++i) normal[F.at(k, i)] = psi[k] * v[i];
      halfspaces.push_back({std::move(normal), Rational(1)});
    }
  }
  std::vector<LinearMap> out;
  for (const auto& x : vertex_enumerate(halfspaces, n, dim_cap)) out.emplace_back(A, K, F.extract(x));
  return out;
}

DefectReport injectivity_defect(const LinearMap& h, const PolyhedralSpace& K, std::size_t dim_cap) {
  require_contraction(h, "h");
  const PolyhedralSpace& A = h.domain();
  DefectReport worst{Rational(0), std::nullopt, DefectKind::Injectivity, std::nullopt};
  if (A.dim() == 0 || K.dim() == 0) {
    worst.witness = LinearMap::zero(h.codomain(), K);
    worst.probe = LinearMap::zero(A, K);
    return worst;
  }
  for (const auto& f : operator_ball_vertices(A, K, dim_cap)) {
    // The inner value is even in f (replace g by −g), so skip one of ±f.
    const Matrix neg = (-1) * f.matrix();
    if (neg.row_list() < f.matrix().row_list()) continue;
    DefectReport r = factorization_defect(h, f, DefectKind::Injectivity);
    if (!worst.probe || r.value > worst.value) {
      worst.value = r.value;
      worst.witness = std::move(r.witness);
      worst.probe = f;
    }
  }
  return worst;
}

ProductInjectivity product_injectivity(const LinearMap& h, const PolyhedralSpace& K, const PolyhedralSpace& L,
                                       std::size_t dim_cap) {
  ProductInjectivity out{injectivity_defect(h, direct_sum(K, L, SumKind::Max), dim_cap), Rational(0), Rational(0)};
  out.on_first = injectivity_defect(h, K, dim_cap).value;
  out.on_second = injectivity_defect(h, L, dim_cap).value;
  return out;
}

std::vector<SaturationEntry> saturation_report(const LinearMap& h, const PolyhedralSpace& K,
                                               const std::vector<LinearMap>& test_isometries,
                                               const std::vector<LinearMap>& extra_candidates,
                                               std::size_t candidate_limit) {
  require_isometry(h, "h");
  const PolyhedralSpace& A = h.domain();
  const PolyhedralSpace& B = h.codomain();
  for (std::size_t i = 0; i < test_isometries.size(); ++i) {
    const LinearMap& f = test_isometries[i];
    if (!(f.domain() == A) || !(f.codomain() == K)) {
      throw Error(ErrorCode::DimensionMismatch, "test map " + std::to_string(i) + " is not a map A -> K");
    }
    require_isometry(f, "test map " + std::to_string(i));
  }

  // Isometric candidates g: B → K.
  std::vector<LinearMap> candidates;
  auto consider = [&](LinearMap g) {
    if (g.operator_norm() != Rational(1) && B.dim() > 0) return;
    if (!g.isometry_defect().is_isometry()) return;
    candidates.push_back(std::move(g));
  };
  if (B.dim() == 0) {
    consider(LinearMap::zero(B, K));
  } else if (K.dim() >= B.dim()) {
    std::vector<RatVec> basis;
    for (auto idx : independent_subset(B.vertices(), B.dim())) basis.push_back(B.vertices()[idx]);
    const Matrix Binv = *inverse(Matrix::from_columns(basis, B.dim()));
    const auto& VK = K.vertices();
    std::vector<std::size_t> digits(B.dim(), 0);
    for (std::size_t count = 0; count < candidate_limit; ++count) {
      std::vector<RatVec> images;
      for (auto d : digits) images.push_back(VK[d]);
      Matrix g = Matrix::from_columns(images, K.dim()) * Binv;
      bool unit_on_vertices = true;
      for (const auto& v : B.vertices()) {
        if (K.norm(g.apply(v)) != Rational(1)) {
          unit_on_vertices = false;
          break;
        }
      }
      if (unit_on_vertices) consider(LinearMap(B, K, std::move(g)));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == VK.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  for (const auto& g : extra_candidates) {
    if (!(g.domain() == B) || !(g.codomain() == K)) {
      throw Error(ErrorCode::DimensionMismatch, "extra candidate is not a map B -> K");
    }
    consider(g);
  }

  std::vector<SaturationEntry> out;
  for (const auto& f : test_isometries) {
    SaturationEntry e{f, std::nullopt, std::nullopt, factorization_defect(h, f, DefectKind::Saturation).value,
                      candidates.size(), false};
    for (const auto& g : candidates) {
      Rational d = (compose(g, h) - f).operator_norm();
      if (!e.best_bound || d < *e.best_bound) {
        e.best_bound = d;
        e.best_g = g;
      }
    }
    e.certified = e.best_bound && e.best_bound->is_zero();
    out.push_back(std::move(e));
  }
  return out;
}

bool LindenstraussReport::no_counterexample_in_catalog() const {
  for (const auto& e : entries)
    if (!e.report.value.is_zero()) return false;
  return true;
}

LindenstraussReport lindenstrauss_report(const PolyhedralSpace& K, const MorphismCatalog& catalog,
                                         std::size_t dim_cap) {
  LindenstraussReport out;
  for (const auto& e : catalog.isometries()) out.entries.push_back({e.name, injectivity_defect(e.map, K, dim_cap)});
  return out;
}

LinearMap request_candidate(const PolyhedralSpace& A, const PolyhedralSpace& K, std::size_t k, std::size_t denom_cap) {
  if (denom_cap == 0) throw Error(ErrorCode::PreconditionViolated, "denominator cap must be positive");
  if (A.dim() == 0 || K.dim() == 0) return LinearMap::zero(A, K);
  std::vector<RatVec> points;
  for (std::size_t j = denom_cap; j >= 1; --j)
    for (const auto& v : K.vertices()) points.push_back(Rational(static_cast<long>(j), static_cast<long>(denom_cap)) * v);
  points.push_back(zeros(K.dim()));

  std::size_t valid = 0;
  while (true) {
    std::vector<std::size_t> digits(A.dim(), 0);
    const std::size_t start_valid = valid;
    while (true) {
      std::vector<RatVec> images;
      for (auto d : digits) images.push_back(points[d]);
      LinearMap f(A, K, Matrix::from_columns(images, K.dim()));
      if (!f.matrix().is_zero() && f.operator_norm() <= Rational(1)) {
        if (valid == k) return f;
        ++valid;
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == points.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    // Wrap around: restart with k reduced modulo the number of valid maps.
    const std::size_t per_pass = valid - start_valid;
    k = start_valid + (k - start_valid) % per_pass;
    valid = start_valid;
  }
}

GurariiLog gurarii_build(const PolyhedralSpace& seed, const MorphismCatalog& catalog, const GurariiOptions& options) {
  const std::vector<CatalogEntry> H = catalog.isometries();
  if (H.empty()) throw Error(ErrorCode::EmptyInput, "the catalog has no isometries");

  GurariiLog log;
  log.stages.push_back(seed);
  // For residual audits: g_r ∘ h_r lands in stage r+1, f_r in stage r.
  std::vector<std::pair<LinearMap, std::size_t>> lifted;  // (g_r h_r, r+1)
  std::vector<std::pair<LinearMap, std::size_t>> requested;  // (f_r, r)

  auto transport = [&](std::size_t from) -> LinearMap {
    LinearMap k = LinearMap::identity(log.stages[from]);
    for (std::size_t i = from; i < log.links.size(); ++i) k = compose(log.links[i], k);
    return k;
  };

  for (std::size_t n = 0; n < options.rounds; ++n) {
    const CatalogEntry& entry = H[n % H.size()];
    const PolyhedralSpace& Kn = log.stages.back();
    const LinearMap f = request_candidate(entry.map.domain(), Kn, n / H.size(), options.denom_cap);
    std::optional<EpsPushout> pushed;
    try {
      pushed = eps_pushout(entry.map, f, Rational(0), options.dim_cap);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DimensionCapExceeded) throw;
      log.truncated = true;
      log.stop_reason = err.what();
      break;
    }
    const EpsPushout& P = *pushed;

    log.links.push_back(P.leg_from_C);
    log.stages.push_back(P.apex);
    lifted.emplace_back(compose(P.leg_from_B, entry.map), n + 1);
    requested.emplace_back(f, n);

    GurariiRound rec{n, entry.name, entry.map, f, P.leg_from_B, Rational(0), P.apex.dim(),
                     P.leg_from_C.isometry_defect(), {}};
    for (std::size_t r = 0; r <= n; ++r) {
      const LinearMap a = compose(transport(lifted[r].second), lifted[r].first);
      const LinearMap b = compose(transport(requested[r].second), requested[r].first);
      rec.residuals.push_back((a - b).operator_norm());
    }
    log.rounds.push_back(std::move(rec));
  }
  return log;
}

}  // namespace polyban
