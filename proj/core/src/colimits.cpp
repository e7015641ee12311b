#include "polyban/colimits.hpp"

#include <string>

#include "operator_lp.hpp"
#include "polyban/errors.hpp"
#include "polyban/lp.hpp"

namespace polyban {

namespace {

void require_contraction(const LinearMap& m, const char* what) {
  if (m.operator_norm() > Rational(1)) {
    throw Error(ErrorCode::NormTooLarge,
                std::string(what) + " has operator norm " + m.operator_norm().str() + " > 1");
  }
}

RatVec concat(const RatVec& a, const RatVec& b) {
  RatVec out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Injections B → B ⊕ C and C → B ⊕ C.
Matrix left_injection(std::size_t nb, std::size_t nc) {
  Matrix m(nb + nc, nb);
  for (std::size_t i = 0; i < nb; ++i) m(i, i) = 1;
  return m;
}

Matrix right_injection(std::size_t nb, std::size_t nc) {
  Matrix m(nb + nc, nc);
  for (std::size_t i = 0; i < nc; ++i) m(nb + i, i) = 1;
  return m;
}

}  // namespace

EpsPushout eps_pushout(const LinearMap& f, const LinearMap& g, const Rational& eps, std::size_t dim_cap) {
  if (eps < Rational(0)) throw Error(ErrorCode::PreconditionViolated, "eps must be nonnegative");
  if (!(f.domain() == g.domain())) throw Error(ErrorCode::DimensionMismatch, "f and g have different domains");
  require_contraction(f, "f");
  require_contraction(g, "g");

  const PolyhedralSpace& A = f.domain();
  const PolyhedralSpace& B = f.codomain();
  const PolyhedralSpace& C = g.codomain();
  const std::size_t nb = B.dim(), nc = C.dim(), n = nb + nc;
  if (n > dim_cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "pushout ambient dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dim_cap));
  }

  std::vector<RatVec> sum_ball;
  for (const auto& b : B.vertices()) sum_ball.push_back(concat(b, zeros(nc)));
  for (const auto& c : C.vertices()) sum_ball.push_back(concat(zeros(nb), c));

  EpsPushout P{eps, f, g, {}, LinearMap::zero(B, {}), LinearMap::zero(C, {}), {}, {}, {}};

  if (eps > Rational(0)) {
    std::vector<RatVec> pts = sum_ball;
    const Rational inv = Rational(1) / eps;
    for (const auto& v : A.vertices()) pts.push_back(inv * concat(f.apply(v), -g.apply(v)));
    P.apex = n == 0 ? PolyhedralSpace::zero() : PolyhedralSpace::from_vertices(std::move(pts), n, dim_cap);
    P.quotient = Matrix::identity(n);
  } else {
    std::vector<RatVec> rel;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      RatVec e = unit_vector(A.dim(), i);
      rel.push_back(concat(f.apply(e), -g.apply(e)));
    }
    RowEchelon ech = row_echelon(Matrix::from_rows(rel, n));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) P.relation_basis.push_back(ech.reduced.row(r));
    P.relation_pivots = ech.pivots;

    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_pivot[i]) kept.push_back(i);

    // q(z) = z − Σ_r z_{p_r} n_r, restricted to the kept coordinates.
    Matrix q(kept.size(), n);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::size_t col = kept[k];
      q(k, col) = 1;
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) q(k, ech.pivots[r]) -= P.relation_basis[r][col];
    }
    P.quotient = q;
    std::vector<RatVec> pts;
    for (const auto& z : sum_ball) {
      RatVec w = q.apply(z);
      if (!is_zero(w)) pts.push_back(std::move(w));
    }
    P.apex = kept.empty() ? PolyhedralSpace::zero()
                          : PolyhedralSpace::from_vertices(std::move(pts), kept.size(), dim_cap);
  }

  P.leg_from_B = LinearMap(B, P.apex, P.quotient * left_injection(nb, nc));
  P.leg_from_C = LinearMap(C, P.apex, P.quotient * right_injection(nb, nc));
  return P;
}

Rational pushout_formula_norm(const LinearMap& f, const LinearMap& g, const Rational& eps, const RatVec& x,
                              const RatVec& y) {
  const PolyhedralSpace& A = f.domain();
  const PolyhedralSpace& B = f.codomain();
  const PolyhedralSpace& C = g.codomain();
  const std::size_t na = A.dim(), nb = B.dim(), nc = C.dim();
  if (x.size() != nb || y.size() != nc) throw Error(ErrorCode::DimensionMismatch, "point has the wrong shape");

  // Variables: b (nb), c (nc), a (na), sB, sC, sA.
  const std::size_t ob = 0, oc = nb, oa = nb + nc, sb = nb + nc + na, sc = sb + 1, sa = sb + 2;
  LinearProgram lp(sa + 1);
  RatVec obj(sa + 1);
  obj[sb] = 1;
  obj[sc] = 1;
  obj[sa] = eps;
  lp.set_objective(std::move(obj), Sense::Minimize);
  // x = b + f(a)
  for (std::size_t i = 0; i < nb; ++i) {
    RatVec row(sa + 1);
    row[ob + i] = 1;
    for (std::size_t j = 0; j < na; ++j) row[oa + j] = f.matrix()(i, j);
    lp.add_constraint(std::move(row), Relation::Equal, x[i]);
  }
  // y = c − g(a)
  for (std::size_t i = 0; i < nc; ++i) {
    RatVec row(sa + 1);
    row[oc + i] = 1;
    for (std::size_t j = 0; j < na; ++j) row[oa + j] = -g.matrix()(i, j);
    lp.add_constraint(std::move(row), Relation::Equal, y[i]);
  }
  auto gauge = [&](const PolyhedralSpace& S, std::size_t off, std::size_t s) {
    for (const auto& phi : S.facets()) {
      RatVec row(sa + 1);
      for (std::size_t i = 0; i < S.dim(); ++i) row[off + i] = phi[i];
      row[s] = -1;
      lp.add_constraint(std::move(row), Relation::LessEqual, 0);
    }
    lp.add_lower_bound(s, 0);
  };
  gauge(B, ob, sb);
  gauge(C, oc, sc);
  gauge(A, oa, sa);
  LPResult r = lp_solve(lp);
  if (!r.optimal()) throw std::logic_error("pushout_formula_norm: decomposition program not optimal");
  return r.optimum;
}

LinearMap pushout_mediator(const EpsPushout& P, const LinearMap& f_prime, const LinearMap& g_prime) {
  if (!(f_prime.domain() == P.g.codomain()) || !(g_prime.domain() == P.f.codomain()) ||
      !(f_prime.codomain() == g_prime.codomain())) {
    throw Error(ErrorCode::DimensionMismatch, "cocone does not match the pushout square");
  }
  require_contraction(f_prime, "f'");
  require_contraction(g_prime, "g'");
  const LinearMap defect = compose(g_prime, P.f) - compose(f_prime, P.g);
  const Rational gap = defect.operator_norm();
  if (gap > P.eps) {
    throw Error(ErrorCode::NotEpsCommutative,
                "cocone commutes only up to " + gap.str() + " > eps = " + P.eps.str());
  }

  // t on B ⊕ C is [g′ | f′]; for eps = 0 it vanishes on N and descends to
  // the kept coordinates.
  const Matrix full = hconcat(g_prime.matrix(), f_prime.matrix());
  Matrix t;
  if (P.eps > Rational(0)) {
    t = full;
  } else {
    std::vector<bool> is_pivot(full.cols(), false);
    for (auto p : P.relation_pivots) is_pivot[p] = true;
    std::vector<RatVec> cols;
    for (std::size_t c = 0; c < full.cols(); ++c)
      if (!is_pivot[c]) cols.push_back(full.column(c));
    t = Matrix::from_columns(cols, full.rows());
  }
  LinearMap mediator(P.apex, f_prime.codomain(), std::move(t));

  if (!(compose(mediator, P.leg_from_C) == f_prime) || !(compose(mediator, P.leg_from_B) == g_prime)) {
    throw Error(ErrorCode::NotEpsCommutative, "cocone is not well defined on the relation subspace");
  }
  if (mediator.operator_norm() > Rational(1)) {
    throw std::logic_error("pushout_mediator: mediator norm exceeds 1 on an eps-commutative cocone");
  }
  return mediator;
}

bool legs_jointly_span(const EpsPushout& P) {
  return rank(hconcat(P.leg_from_B.matrix(), P.leg_from_C.matrix())) == P.apex.dim();
}

Chain::Chain(std::vector<LinearMap> links) : links_(std::move(links)) {
  if (links_.empty()) throw Error(ErrorCode::EmptyInput, "a chain needs at least one link or space");
  spaces_.push_back(links_.front().domain());
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (!(links_[i].domain() == spaces_.back())) {
      throw Error(ErrorCode::DimensionMismatch, "link " + std::to_string(i) + " does not start at K_" +
                                                    std::to_string(i));
    }
    require_contraction(links_[i], ("link " + std::to_string(i)).c_str());
    spaces_.push_back(links_[i].codomain());
  }
  composites_.resize(spaces_.size());
  for (std::size_t i = 0; i < spaces_.size(); ++i) {
    composites_[i].push_back(LinearMap::identity(spaces_[i]));
    for (std::size_t j = i; j < links_.size(); ++j) composites_[i].push_back(compose(links_[j], composites_[i].back()));
  }
}

Chain::Chain(PolyhedralSpace only) {
  spaces_.push_back(only);
  composites_.push_back({LinearMap::identity(only)});
}

const PolyhedralSpace& Chain::space(std::size_t i) const {
  if (i >= spaces_.size()) throw Error(ErrorCode::StageOutOfRange, "no stage " + std::to_string(i));
  return spaces_[i];
}

const LinearMap& Chain::composite(std::size_t i, std::size_t j) const {
  if (i > j || j >= spaces_.size()) {
    throw Error(ErrorCode::StageOutOfRange, "no composite from stage " + std::to_string(i) + " to " + std::to_string(j));
  }
  return composites_[i][j - i];
}

std::vector<Rational> chain_colimit_distance(const Chain& ch, const LinearMap& f, const LinearMap& g,
                                             std::size_t stage) {
  const PolyhedralSpace& K = ch.space(stage);
  if (!(f.codomain() == K) || !(g.codomain() == K) || !(f.domain() == g.domain())) {
    throw Error(ErrorCode::DimensionMismatch, "f and g must be parallel maps into the given stage");
  }
  const LinearMap diff = f - g;
  std::vector<Rational> out;
  for (std::size_t j = stage; j < ch.length(); ++j) out.push_back(compose(ch.composite(stage, j), diff).operator_norm());
  return out;
}

std::pair<Rational, LinearMap> best_stage_approximation(const Chain& ch, const LinearMap& f, std::size_t stage) {
  const PolyhedralSpace& Ki = ch.space(stage);
  const PolyhedralSpace& KN = ch.space(ch.last());
  const PolyhedralSpace& A = f.domain();
  if (!(f.codomain() == KN)) throw Error(ErrorCode::DimensionMismatch, "f must land in the last space of the chain");

  detail::MatrixVar G{0, Ki.dim(), A.dim()};
  const std::size_t s = G.size();
  LinearProgram lp(s + 1);
  RatVec obj(s + 1);
  obj[s] = 1;
  lp.set_objective(std::move(obj), Sense::Minimize);
  lp.add_lower_bound(s, 0);
  detail::add_ball_constraints(lp, G, nullptr, nullptr, Ki, A.vertices(), std::nullopt, 1);
  // ψ(k_{iN} G v − f v) ≤ s, written with T = k_{iN}G expanded per facet.
  const Matrix& k = ch.composite(stage, ch.last()).matrix();
  for (const auto& v : A.vertices()) {
    const RatVec fv = f.apply(v);
    for (const auto& psi : KN.facets()) {
      const RatVec w = k.apply_left(psi);  // ψ∘k_{iN}
      RatVec row(s + 1);
      for (std::size_t r = 0; r < G.rows; ++r) {
        if (w[r].is_zero()) continue;
        for (std::size_t c = 0; c < G.cols; ++c) row[G.at(r, c)] += w[r] * v[c];
      }
      row[s] = -1;
      lp.add_constraint(std::move(row), Relation::LessEqual, dot(psi, fv));
    }
  }
  LPResult r = lp_solve(lp);
  if (!r.optimal()) throw std::logic_error("best_stage_approximation: stage program not optimal");
  return {r.optimum, LinearMap(A, Ki, G.extract(r.witness))};
}

StageFactorization factor_through_stage(const Chain& ch, const LinearMap& f, const Rational& eps) {
  require_contraction(f, "f");
  std::vector<Rational> optima;
  for (std::size_t i = 0; i < ch.length(); ++i) {
    auto [value, g] = best_stage_approximation(ch, f, i);
    optima.push_back(value);
    if (value <= eps) {
      Rational distance = (compose(ch.composite(i, ch.last()), g) - f).operator_norm();
      return StageFactorization{i, std::move(g), std::move(distance), std::move(optima)};
    }
  }
  throw std::logic_error("factor_through_stage: the last stage must succeed");
}

LinearMap rescale_to_contraction(const LinearMap& f_star, const Rational& eps_prime) {
  if (eps_prime < Rational(0)) throw Error(ErrorCode::PreconditionViolated, "eps' must be nonnegative");
  return f_star.scaled(Rational(1) / (Rational(1) + eps_prime));
}

}  // namespace polyban
