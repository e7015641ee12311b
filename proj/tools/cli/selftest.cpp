#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "polyban/polyban.hpp"

namespace polyban::cli {

namespace {

using Check = std::pair<std::string, std::function<bool()>>;

std::vector<Check> checks() {
  const PolyhedralSpace R = PolyhedralSpace::real_line();
  const PolyhedralSpace l1 = PolyhedralSpace::ell_one(2);
  const PolyhedralSpace linf2 = PolyhedralSpace::ell_infinity(2);
  const PolyhedralSpace linf3 = PolyhedralSpace::ell_infinity(3);

  return {
      {"lp_lower_bound",
       [] {
         LinearProgram lp(1);
         lp.set_objective({1}, Sense::Minimize);
         lp.add_constraint({1}, Relation::GreaterEqual, 3);
         LPResult r = lp_solve(lp);
         return r.optimal() && r.optimum == Rational(3);
       }},
      {"lp_infeasible",
       [] {
         LinearProgram lp(1);
         lp.add_constraint({1}, Relation::LessEqual, -1);
         lp.add_constraint({1}, Relation::GreaterEqual, 1);
         return lp_solve(lp).status == LPStatus::Infeasible;
       }},
      {"polar_involution", [=] { return dual_space(l1) == linf2 && dual_space(dual_space(linf3)) == linf3; }},
      {"sum_kinds",
       [=] { return direct_sum(R, R, SumKind::Sum) == l1 && direct_sum(R, R, SumKind::Max) == linf2; }},
      {"norm_values", [=] { return linf2.norm({3, -1}) == Rational(3) && l1.norm({1, 1}) == Rational(2); }},
      {"isometry_defect_half",
       [=] {
         const IsometryDefect d = LinearMap(R, R, Matrix::from_rows({{Rational(1, 2)}})).isometry_defect();
         return d.upper == Rational(0) && d.lower == Rational(1, 2);
       }},
      {"ideal_coordinate_line",
       [=] { return ideal_defect(Embedding(LinearMap(R, linf2, Matrix::from_rows({{1}, {0}})))).value.is_zero(); }},
      {"ideal_hyperplane",
       [=] {
         const std::vector<RatVec> basis{{1, -1, 0}, {0, 1, -1}};
         const PolyhedralSpace K = induced_subspace(linf3, basis);
         return ideal_defect(Embedding(LinearMap(K, linf3, Matrix::from_columns(basis, 3)))).value == Rational(1, 3);
       }},
      {"pushout_formula",
       [=] {
         const LinearMap id = LinearMap::identity(R);
         for (const Rational& eps : {Rational(1, 4), Rational(1)}) {
           const EpsPushout P = eps_pushout(id, id, eps);
           for (const RatVec& p : {RatVec{1, 0}, RatVec{1, 1}, RatVec{Rational(1, 3), -2}}) {
             if (P.apex.norm(p) != pushout_formula_norm(id, id, eps, {p[0]}, {p[1]})) return false;
           }
         }
         return true;
       }},
      {"slack_forced_witness",
       [=] {
         const PPFormula phi = parse_formula("EXISTS y . x1 = 2*y AND norm(y) <= 1");
         const Slack sl = satisfaction_slack(R, phi, {{3}});
         return sl.kind == SlackKind::Finite && sl.value == Rational(1, 2);
       }},
      {"gurarii_one_round",
       [=] {
         MorphismCatalog cat;
         cat.add("first", LinearMap(R, linf2, Matrix::from_rows({{1}, {0}})));
         const GurariiLog log = gurarii_build(R, cat, {1, 2, kDefaultDimensionCap});
         return log.rounds.size() == 1 && log.stages.back().dim() == 2 && log.rounds[0].residuals[0].is_zero() &&
                log.rounds[0].link_defect.is_isometry();
       }},
      {"basis_repair",
       [=] {
         const Rational eps(1, 2);
         const Rational delta = eps / Rational(2);  // n = 2, M = 1 on ell_infinity(2)
         const LinearMap t_prime(linf2, linf2, Matrix::from_rows({{Rational(1) + delta, 0}, {0, 1}}));
         const BasisRepair rep = repair_fix_basis(t_prime, {{1, 0}}, eps);
         return rep.delta == delta && rep.distance <= eps && rep.t.apply(RatVec{1, 0}) == RatVec{1, 0};
       }},
  };
}

}  // namespace

bool selftest(std::ostream& out) {
  bool ok = true;
  for (const auto& [name, fn] : checks()) {
    bool pass = false;
    try {
      pass = fn();
    } catch (const std::exception& e) {
      out << "error " << name << " = " << e.what() << "\n";
    }
    out << "check " << name << " = " << (pass ? "pass" : "fail") << "\n";
    ok = ok && pass;
  }
  out << "selftest = " << (ok ? "pass" : "fail") << "\n";
  return ok;
}

}  // namespace polyban::cli
