// Property-based acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "polyban/polyban.hpp"

using namespace polyban;
using testkit::Generator;

namespace {

const PolyhedralSpace R = PolyhedralSpace::real_line();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Square {
  std::string name;
  LinearMap f;  // A → B
  LinearMap g;  // A → C
};

// Spans of f and g with dim A <= 2 and dim B, dim C <= 3: random contractions,
// isometric embeddings, and a few fixed shapes.
std::vector<Square> square_corpus() {
  Generator gen(1001);
  std::vector<Square> out;
  out.push_back({"id_id_line", LinearMap::identity(R), LinearMap::identity(R)});
  out.push_back({"hyperplane_id", testkit::hyperplane_embedding(), LinearMap::identity(testkit::hyperplane_embedding().domain())});
  out.push_back({"e1_diag", testkit::coordinate_embedding(1, 2),
                 LinearMap(R, PolyhedralSpace::ell_infinity(2), Matrix::from_rows({{1}, {1}}))});
  out.push_back({"l1_e1_half", LinearMap(R, PolyhedralSpace::ell_one(2), Matrix::from_rows({{1}, {0}})),
                 LinearMap(R, R, Matrix::from_rows({{Rational(1, 2)}}))});
  for (int i = 0; i < 3; ++i) {
    const auto L = gen.space(2 + gen.index(2));
    const LinearMap e = gen.subspace_embedding(L, 1);
    out.push_back({"embedding_" + std::to_string(i), e, gen.contraction(e.domain(), gen.space(1 + gen.index(2)))});
  }
  for (int i = 0; i < 3; ++i) {
    const auto A = gen.space(1 + gen.index(2));
    const auto B = gen.space(1 + gen.index(3));
    const auto C = gen.space(1 + gen.index(2));
    out.push_back({"random_" + std::to_string(i), gen.contraction(A, B), gen.contraction(A, C)});
  }
  return out;
}

const std::vector<Rational> kEps{Rational(0), Rational(1, 4), Rational(1)};

struct Pushouts {
  std::vector<std::pair<std::string, EpsPushout>> items;
};

Pushouts build_pushouts(const std::vector<Square>& squares) {
  Pushouts p;
  for (const Square& s : squares)
    for (const Rational& eps : kEps) p.items.emplace_back(s.name + "@" + eps.str(), eps_pushout(s.f, s.g, eps));
  return p;
}

// 1. Apex gauge against the decomposition LP.
Outcome apex_gauge(const Pushouts& pushouts, double build_seconds) {
  Outcome o;
  const auto start = Clock::now();
  Generator gen(1002);
  std::size_t points = 0;
  for (const auto& [name, P] : pushouts.items) {
    const std::size_t b = P.f.codomain().dim(), c = P.g.codomain().dim();
    for (int k = 0; k < 20; ++k) {
      const RatVec x = gen.vector(b), y = gen.vector(c);
      RatVec xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      const Rational apex = P.apex.norm(P.quotient.apply(xy));
      const Rational formula = pushout_formula_norm(P.f, P.g, P.eps, x, y);
      o.require(apex == formula, name + ": " + apex.str() + " vs " + formula.str());
      ++points;
    }
  }
  const double total = build_seconds + seconds_since(start);
  o.require(total < 60.0, "runtime over one minute");
  o.require(pushouts.items.size() >= 30, "fewer than 30 squares");
  o.detail << pushouts.items.size() << " squares, " << points << " points, " << std::fixed;
  o.detail.precision(1);
  o.detail << total << " s";
  return o;
}

// 2. Mediators for generated cocones: t∘legs for random contractions t, and
// for eps > 0 independent pairs scaled so that they commute within eps.
Outcome universal_property(const Pushouts& pushouts) {
  Outcome o;
  Generator gen(1003);
  std::size_t cocones = 0;
  for (const auto& [name, P] : pushouts.items) {
    o.require(legs_jointly_span(P), name + ": legs do not span");
    for (int k = 0; k < 20; ++k) {
      const auto Dp = gen.space(1 + gen.index(2));
      std::optional<LinearMap> t;
      LinearMap f_prime = LinearMap::zero(P.g.codomain(), Dp), g_prime = LinearMap::zero(P.f.codomain(), Dp);
      if (P.eps.is_zero() || k % 2 == 0) {
        t = gen.contraction(P.apex, Dp);
        f_prime = compose(*t, P.leg_from_C);
        g_prime = compose(*t, P.leg_from_B);
      } else {
        const Rational scale = std::min(Rational(1), P.eps) / 2;
        f_prime = gen.contraction(P.g.codomain(), Dp).scaled(scale);
        g_prime = gen.contraction(P.f.codomain(), Dp).scaled(scale);
      }
      const LinearMap m = pushout_mediator(P, f_prime, g_prime);
      o.require(compose(m, P.leg_from_C) == f_prime && compose(m, P.leg_from_B) == g_prime,
                name + ": leg equation");
      o.require(m.operator_norm() <= Rational(1), name + ": mediator norm " + m.operator_norm().str());
      if (t) o.require(m == *t, name + ": mediator differs from generating map");
      ++cocones;
    }
  }
  o.detail << pushouts.items.size() << " pushouts, " << cocones << " cocones";
  return o;
}

// 3. Legs opposite an isometry are isometries.
Outcome isometry_stability(const Pushouts& pushouts) {
  Outcome o;
  std::size_t checked = 0;
  auto audit = [&](const std::string& name, const EpsPushout& P) {
    if (P.f.isometry_defect().is_isometry()) {
      o.require(isometry_defect(P.leg_from_C).is_isometry(), name + ": leg from C");
      ++checked;
    }
    if (P.g.isometry_defect().is_isometry()) {
      o.require(isometry_defect(P.leg_from_B).is_isometry(), name + ": leg from B");
      ++checked;
    }
  };
  for (const auto& [name, P] : pushouts.items) audit(name, P);
  Generator gen(1004);
  for (const auto& [name, e] : testkit::embedding_corpus(1004)) {
    if (e.codomain().dim() > 3) continue;
    const LinearMap u = gen.contraction(e.domain(), gen.space(1 + gen.index(2)));
    for (const Rational& eps : kEps) audit(name + "@" + eps.str(), eps_pushout(e, u, eps));
  }
  o.require(checked > 0, "no isometric inputs");
  o.detail << checked << " isometric legs";
  return o;
}

// 4. max-defect(g∘f) <= max-defect(f) + max-defect(g) for maps of norm <= 1.
Outcome composition_bound() {
  Outcome o;
  Generator gen(1005);
  const auto corpus = testkit::embedding_corpus(1005);
  auto near_isometry = [&](const PolyhedralSpace& A, const PolyhedralSpace& B) -> LinearMap {
    switch (gen.index(3)) {
      case 0: return gen.contraction(A, B);
      case 1: return gen.unit_map(A, B);
      default: {
        if (A == B) return LinearMap::identity(A).scaled(Rational(gen.integer(2, 4), 4));
        return gen.unit_map(A, B);
      }
    }
  };
  std::size_t pairs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    LinearMap f = LinearMap::identity(R), g = LinearMap::identity(R);
    if (trial % 3 == 0) {
      const LinearMap& e = corpus[gen.index(corpus.size())].map;
      f = e.scaled(Rational(gen.integer(3, 4), 4));
      g = near_isometry(e.codomain(), gen.space(1 + gen.index(3)));
    } else {
      const auto A = gen.space(1 + gen.index(2)), B = gen.space(1 + gen.index(3)), C = gen.space(1 + gen.index(3));
      f = near_isometry(A, B);
      g = near_isometry(B, C);
    }
    const Rational lhs = compose(g, f).isometry_defect().max();
    const Rational rhs = f.isometry_defect().max() + g.isometry_defect().max();
    o.require(lhs <= rhs, "pair " + std::to_string(trial) + ": " + lhs.str() + " > " + rhs.str());
    ++pairs;
  }
  o.detail << pairs << " pairs";
  return o;
}

// The hyperplane's minimal extension norm, bracketed independently: an upper
// bound from a grid over all left inverses t0 + w·(1,1,1), and a lower bound
// from the permutation average I − J/3 of any projection onto the hyperplane.
std::pair<Rational, Rational> hyperplane_extension_bracket() {
  const LinearMap f = testkit::hyperplane_embedding();
  const auto L = f.codomain();
  const Matrix t0 = Matrix::from_rows({{1, 0, 0}, {1, 1, 0}});
  std::optional<Rational> upper;
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      Matrix t = t0;
      for (std::size_t c = 0; c < 3; ++c) {
        t(0, c) += Rational(a, 12);
        t(1, c) += Rational(b, 12);
      }
      const Rational n = testkit::operator_norm_by_facets(LinearMap(L, f.domain(), t));
      if (!upper || n < *upper) upper = n;
    }
  Matrix P(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) P(i, j) = Rational(i == j ? 2 : -1, 3);
  return {testkit::operator_norm_by_facets(LinearMap(L, L, P)), *upper};
}

// 5. Ideal ⟺ purity on sampled squares, with the two anchors.
Outcome ideal_purity() {
  Outcome o;
  Generator gen(1006);
  std::size_t squares = 0, ideals = 0, non_ideals = 0;
  const Rational e1 = ideal_defect(Embedding(testkit::coordinate_embedding(1, 2))).value;
  o.require(e1.is_zero(), "span{e1} in linf2 defect " + e1.str());
  const auto [lower, upper] = hyperplane_extension_bracket();
  o.require(lower == upper, "oracle bracket [" + lower.str() + ", " + upper.str() + "] not tight");
  const Rational hyper = ideal_defect(Embedding(testkit::hyperplane_embedding())).value;
  o.require(hyper == upper - Rational(1), "hyperplane defect " + hyper.str() + " vs oracle " + (upper - 1).str());
  o.require(hyper == Rational(1, 3), "hyperplane defect " + hyper.str() + " vs expected 1/3");

  for (const auto& [name, map] : testkit::embedding_corpus(1006)) {
    const Embedding e(map);
    if (ideal_defect(e).value.is_zero()) {
      ++ideals;
      for (int k = 0; k < 50; ++k) {
        const testkit::CommutingSquare sq = testkit::sample_square(gen, map);
        const Rational d = pure_square_defect(e, sq.g, sq.u, sq.v).value;
        o.require(d.is_zero(), name + ": square defect " + d.str());
        ++squares;
      }
    } else {
      ++non_ideals;
      const testkit::CommutingSquare sq = testkit::canonical_square(map);
      const Rational d = pure_square_defect(e, sq.g, sq.u, sq.v).value;
      o.require(d > Rational(0), name + ": canonical square defect 0");
    }
  }
  o.detail << ideals << " ideals x 50 squares (" << squares << "), " << non_ideals
           << " non-ideals with positive canonical square; hyperplane defect " << hyper << ", oracle bracket ["
           << lower << ", " << upper << "]";
  return o;
}

// 6. Satisfaction transfer over a formula battery, and distinguishing gaps.
Outcome satisfaction_transfer() {
  Outcome o;
  Generator gen(1007);
  std::size_t formulas = 0, satisfied = 0, gaps = 0;
  for (const auto& [name, map] : testkit::embedding_corpus(1007)) {
    const Embedding e(map);
    const Rational defect = ideal_defect(e).value;
    if (defect.is_zero()) {
      for (int k = 0; k < 100; ++k) {
        const std::size_t n = 1 + gen.index(2);
        const PPFormula phi = testkit::random_formula(gen, n, 1 + gen.index(2));
        std::vector<Vector> a;
        for (std::size_t i = 0; i < n; ++i) a.emplace_back(e.sub(), gen.vector(e.sub().dim(), 2, 2));
        const TransferResult r = transfer_check(e, phi, a);
        o.require(r.in_sub.satisfied() == r.in_ambient.satisfied(),
                  name + ": " + to_string(phi) + " K " + to_string(r.in_sub) + " L " + to_string(r.in_ambient));
        if (r.in_sub.satisfied()) ++satisfied;
        ++formulas;
      }
    } else {
      const Distinguisher d = distinguishing_formula(e);
      std::vector<Vector> a;
      for (const auto& v : d.assignment) a.emplace_back(e.sub(), v);
      const TransferResult r = transfer_check(e, d.formula, a);
      o.require(r.in_ambient.satisfied() && !r.in_sub.satisfied(), name + ": no gap");
      o.require(r.in_sub.kind == SlackKind::Finite && r.in_sub.value == defect,
                name + ": gap " + to_string(r.in_sub) + " vs defect " + defect.str());
      ++gaps;
    }
  }
  o.detail << formulas << " formulas on ideals (" << satisfied << " satisfied), " << gaps << " certified gaps";
  return o;
}

// 7. Least stage on constructed chains; distance sequences.
Outcome chain_factorization() {
  Outcome o;
  Generator gen(1008);
  std::size_t chains = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t length = 2 + gen.index(2);
    std::vector<LinearMap> links;
    PolyhedralSpace K = gen.space(1 + gen.index(2));
    for (std::size_t i = 0; i + 1 < length; ++i) {
      const auto next = gen.space(1 + gen.index(2));
      links.push_back(gen.coin() ? gen.unit_map(K, next) : gen.contraction(K, next));
      K = next;
    }
    const Chain ch(links);
    const auto A = gen.space(1);
    const std::size_t origin = gen.index(ch.length());
    const LinearMap f = compose(ch.composite(origin, ch.last()), gen.contraction(A, ch.space(origin)));
    const Rational eps(gen.integer(1, 4), 8);
    const StageFactorization fac = factor_through_stage(ch, f, eps);
    const std::string tag = "chain " + std::to_string(trial);
    o.require(fac.stage <= origin, tag + ": stage past the constructed factorization");
    o.require(fac.g.operator_norm() <= Rational(1), tag + ": ‖g‖ > 1");
    const Rational direct = (compose(ch.composite(fac.stage, ch.last()), fac.g) - f).operator_norm();
    o.require(direct == fac.distance && direct <= eps, tag + ": distance " + direct.str());
    if (fac.stage > 0) {
      const Rational before = best_stage_approximation(ch, f, fac.stage - 1).first;
      o.require(before > eps, tag + ": stage " + std::to_string(fac.stage - 1) + " already feasible");
    }

    const std::size_t stage = gen.index(ch.length());
    const LinearMap u = gen.contraction(A, ch.space(stage)), v = gen.contraction(A, ch.space(stage));
    const auto d = chain_colimit_distance(ch, u, v, stage);
    for (std::size_t j = 1; j < d.size(); ++j) o.require(d[j] <= d[j - 1], tag + ": distances increase");
    const LinearMap& k = ch.composite(stage, ch.last());
    o.require(d.back() == (compose(k, u) - compose(k, v)).operator_norm(), tag + ": final distance");
    ++chains;
  }
  o.detail << chains << " chains";
  return o;
}

// 8. Tensor products of ideals are ideals.
Outcome tensor_ideals() {
  Outcome o;
  std::size_t checked = 0, skipped = 0;
  for (const auto& [name, map] : testkit::embedding_corpus(1009)) {
    if (!ideal_defect(Embedding(map)).value.is_zero()) continue;
    for (const auto& K : {R, PolyhedralSpace::ell_one(2), PolyhedralSpace::ell_infinity(2)}) {
      if (K.dim() * map.codomain().dim() > kDefaultDimensionCap) {
        ++skipped;
        continue;
      }
      const LinearMap t = tensor_map(K, map);
      o.require(t.isometry_defect().is_isometry(), name + ": tensor map not isometric");
      const Rational d = ideal_defect(Embedding(t)).value;
      o.require(d.is_zero(), name + " with dim K " + std::to_string(K.dim()) + ": defect " + d.str());
      ++checked;
    }
  }
  o.detail << checked << " tensor embeddings, " << skipped << " beyond the dimension cap";
  return o;
}

MorphismCatalog isometry_catalog() {
  MorphismCatalog c;
  c.add("e1_in_linf2", testkit::coordinate_embedding(1, 2));
  c.add("linf2_in_linf3", testkit::coordinate_embedding(2, 3));
  c.add("diagonal_in_linf2", LinearMap(R, PolyhedralSpace::ell_infinity(2), Matrix::from_rows({{1}, {1}})));
  c.add("e1_in_l1_2", LinearMap(R, PolyhedralSpace::ell_one(2), Matrix::from_rows({{1}, {0}})));
  c.add("hyperplane_linf3", testkit::hyperplane_embedding());
  Generator gen(1010);
  for (int i = 0; i < 3; ++i) c.add("random_line_" + std::to_string(i), gen.subspace_embedding(gen.space(2 + gen.index(2)), 1));
  c.add("random_plane", gen.subspace_embedding(gen.space(3), 2));
  return c;
}

// 9. Product law and injectivity of ℓ∞ⁿ.
Outcome injectivity_products() {
  Outcome o;
  Generator gen(1011);
  const MorphismCatalog catalog = isometry_catalog();
  const auto isos = catalog.isometries();
  std::size_t triples = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const LinearMap& h = isos[gen.index(isos.size())].map;
    const std::size_t a = h.domain().dim();
    const auto K = gen.space(1 + gen.index(a == 1 ? 2 : 1));
    const auto L = gen.space(1 + gen.index(a == 1 ? 2 : 1));
    if (a * (K.dim() + L.dim()) > kDefaultDimensionCap) continue;
    const ProductInjectivity p = product_injectivity(h, K, L);
    const Rational first = injectivity_defect(h, K).value, second = injectivity_defect(h, L).value;
    o.require(p.product.value == std::max(first, second),
              "triple " + std::to_string(trial) + ": " + p.product.value.str() + " vs " + first.str() + ", " + second.str());
    ++triples;
  }
  o.require(triples >= 20, "fewer than 20 triples");
  std::size_t linf = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const LindenstraussReport r = lindenstrauss_report(PolyhedralSpace::ell_infinity(n), catalog);
    o.require(r.entries.size() == isos.size(), "catalog entries skipped for n = " + std::to_string(n));
    o.require(r.no_counterexample_in_catalog(), "linf" + std::to_string(n) + " has a positive defect");
    linf += r.entries.size();
  }
  o.detail << triples << " triples, " << linf << " catalog checks on linf1..linf3";
  return o;
}

// 10. Three Gurarii rounds from ℝ, audited independently of the log.
Outcome gurarii() {
  Outcome o;
  const auto start = Clock::now();
  MorphismCatalog c;
  c.add("e1_in_linf2", testkit::coordinate_embedding(1, 2));
  c.add("diagonal_in_linf2", LinearMap(R, PolyhedralSpace::ell_infinity(2), Matrix::from_rows({{1}, {1}})));
  c.add("hyperplane_linf3", testkit::hyperplane_embedding());
  const GurariiLog log = gurarii_build(R, c, GurariiOptions{3, 2, kDefaultDimensionCap});
  o.require(!log.truncated && log.rounds.size() == 3, "build stopped early: " + log.stop_reason);
  auto link_path = [&](std::size_t i, std::size_t j) {
    LinearMap k = LinearMap::identity(log.stages[i]);
    for (std::size_t s = i; s < j; ++s) k = compose(log.links[s], k);
    return k;
  };
  for (std::size_t r = 0; r < log.rounds.size(); ++r) {
    const GurariiRound& rd = log.rounds[r];
    const LinearMap& link = log.links[r];
    o.require(min_sphere_norm(link) == Rational(1) && operator_norm(link) == Rational(1),
              "link " + std::to_string(r) + " not isometric");
    o.require(rd.dim == log.stages[r].dim() + rd.h.codomain().dim() - rd.h.domain().dim(),
              "round " + std::to_string(r) + " dimension " + std::to_string(rd.dim));
    for (std::size_t j = r + 1; j < log.stages.size(); ++j) {
      const LinearMap lhs = compose(link_path(r + 1, j), compose(rd.g, rd.h));
      const LinearMap rhs = compose(link_path(r, j), rd.f);
      o.require(lhs == rhs, "request " + std::to_string(r) + " residual nonzero at stage " + std::to_string(j));
    }
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "over one minute");
  o.detail << log.rounds.size() << " rounds, dims";
  for (const auto& K : log.stages) o.detail << " " << K.dim();
  o.detail.precision(2);
  o.detail << ", " << std::fixed << t << " s";
  return o;
}

// 11. Basis repair stays within eps whenever the δ bound holds.
Outcome basis_repair() {
  Outcome o;
  Generator gen(1012);
  std::size_t runs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto B = gen.space(1 + gen.index(3)), K = gen.space(1 + gen.index(3));
    const std::size_t n = B.dim();
    Matrix basis = gen.matrix(n, n);
    if (!inverse(basis)) basis = Matrix::identity(n);
    const LinearMap t_prime = gen.contraction(B, K);
    const Rational eps(gen.integer(1, 8), 8);
    const Rational M = basis_coordinate_bound(B, basis);
    const Rational delta = eps / (Rational(static_cast<long>(n)) * M);
    const std::size_t m = gen.index(n + 1);
    std::vector<RatVec> targets;
    for (std::size_t i = 0; i < m; ++i) {
      RatVec col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = basis(r, i);
      targets.push_back(t_prime.apply(col) + gen.vector_of_norm(K, delta * Rational(gen.integer(0, 4), 4)));
    }
    const BasisRepair rep = repair_fix_basis(t_prime, basis, targets, eps);
    const Rational exact = (rep.t - t_prime).operator_norm();
    o.require(exact == rep.distance && exact <= eps, "trial " + std::to_string(trial) + ": " + exact.str());
    for (std::size_t i = 0; i < n; ++i) {
      RatVec col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = basis(r, i);
      o.require(rep.t.apply(col) == (i < m ? targets[i] : t_prime.apply(col)), "trial " + std::to_string(trial) + ": basis image");
    }
    ++runs;
  }
  o.detail << runs << " perturbations";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << o.detail.str() << "\n";
    for (const auto& f : o.failures) std::cout << "  " << f << "\n";
    std::cout.flush();
    if (!o.pass) ++failed;
  };

  const auto squares = square_corpus();
  const auto start = Clock::now();
  std::optional<Pushouts> pushouts;
  try {
    pushouts = build_pushouts(squares);
  } catch (const std::exception& e) {
    std::cout << "pushout corpus failed: " << e.what() << "\n";
  }
  const double build_seconds = seconds_since(start);
  auto with_pushouts = [&](auto fn) {
    return [&, fn]() -> Outcome {
      if (!pushouts) throw std::runtime_error("pushout corpus unavailable");
      return fn(*pushouts);
    };
  };

  report(1, "eps-pushout apex gauge", with_pushouts([&](const Pushouts& p) { return apex_gauge(p, build_seconds); }));
  report(2, "universal property", with_pushouts([](const Pushouts& p) { return universal_property(p); }));
  report(3, "isometry stability", with_pushouts([](const Pushouts& p) { return isometry_stability(p); }));
  report(4, "eps-isometry composition bound", composition_bound);
  report(5, "ideal iff pure", ideal_purity);
  report(6, "satisfaction transfer", satisfaction_transfer);
  report(7, "finite-scale factorization", chain_factorization);
  report(8, "tensor preserves ideals", tensor_ideals);
  report(9, "injectivity product law", injectivity_products);
  report(10, "Gurarii builder", gurarii);
  report(11, "basis repair", basis_repair);
  std::cout << (failed == 0 ? "acceptance = pass" : "acceptance = fail") << "\n";
  return failed == 0 ? 0 : 1;
}
