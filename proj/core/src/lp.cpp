#include "polyban/lp.hpp"

#include <stdexcept>
#include <string>

#include "polyban/errors.hpp"
#include "polyban/matrix.hpp"

namespace polyban {

LinearProgram::LinearProgram(std::size_t variables) : variables_(variables), objective_(variables) {}

void LinearProgram::check_length(const RatVec& coeffs) const {
  if (coeffs.size() != variables_) {
    throw Error(ErrorCode::MalformedProgram, "coefficient vector of length " + std::to_string(coeffs.size()) +
                                                 " for a program with " + std::to_string(variables_) +
                                                 " variables");
  }
}

void LinearProgram::set_objective(RatVec coeffs, Sense sense) {
  check_length(coeffs);
  objective_ = std::move(coeffs);
  sense_ = sense;
}

void LinearProgram::add_constraint(RatVec coeffs, Relation rel, Rational bound) {
  check_length(coeffs);
  constraints_.push_back({std::move(coeffs), rel, std::move(bound)});
}

void LinearProgram::add_constraint(LinearConstraint c) {
  check_length(c.coeffs);
  constraints_.push_back(std::move(c));
}

void LinearProgram::add_lower_bound(std::size_t index, Rational lower) {
  RatVec coeffs(variables_);
  coeffs.at(index) = 1;
  add_constraint(std::move(coeffs), Relation::GreaterEqual, std::move(lower));
}

bool lp_feasible_point(const LinearProgram& lp, const RatVec& x) {
  if (x.size() != lp.variables()) return false;
  for (const auto& c : lp.constraints()) {
    Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.bound) return false;
        break;
      case Relation::Equal:
        if (lhs != c.bound) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.bound) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense simplex tableau for  min d·z  s.t.  E z = rhs, z >= 0.
// Columns [0, m) are structural, [m, m + rows) artificial; the final column
// holds the right-hand side.
class Tableau {
 public:
  Tableau(const std::vector<RatVec>& columns, const RatVec& rhs)
      : rows_(rhs.size()), m_(columns.size()), width_(m_ + rows_ + 1),
        t_(rows_, std::vector<mpq_class>(width_)), basis_(rows_), kept_(rows_, true) {
    for (std::size_t j = 0; j < rows_; ++j) {
      bool flip = rhs[j].sign() < 0;
      for (std::size_t k = 0; k < m_; ++k) {
        const mpq_class& v = columns[k][j].mpq();
        if (sgn(v) != 0) t_[j][k] = flip ? mpq_class(-v) : v;
      }
      t_[j][m_ + j] = 1;
      t_[j][width_ - 1] = flip ? mpq_class(-rhs[j].mpq()) : rhs[j].mpq();
      basis_[j] = m_ + j;
    }
  }

  // Returns false when the phase-1 optimum is positive.
  bool phase_one() {
    std::vector<mpq_class> cost(width_ - 1);
    for (std::size_t j = 0; j < rows_; ++j) cost[m_ + j] = 1;
    run(cost, width_ - 1);
    mpq_class infeas;
    for (std::size_t j = 0; j < rows_; ++j) {
      if (basis_[j] >= m_) infeas += t_[j][width_ - 1];
    }
    if (sgn(infeas) != 0) return false;
    // Drive remaining (zero-level) artificials out of the basis; rows that
    // cannot be pivoted on a structural column are redundant.
    for (std::size_t j = 0; j < rows_; ++j) {
      if (basis_[j] < m_) continue;
      std::size_t col = m_;
      for (std::size_t k = 0; k < m_; ++k) {
        if (sgn(t_[j][k]) != 0) {
          col = k;
          break;
        }
      }
      if (col == m_) {
        kept_[j] = false;
      } else {
        pivot(j, col, nullptr);
      }
    }
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const RatVec& d) {
    std::vector<mpq_class> cost(m_);
    for (std::size_t k = 0; k < m_; ++k) cost[k] = d[k].mpq();
    return run(cost, m_);
  }

  std::size_t rows() const { return rows_; }
  bool kept(std::size_t j) const { return kept_[j]; }
  std::size_t basic(std::size_t j) const { return basis_[j]; }
  const mpq_class& value(std::size_t j) const { return t_[j][width_ - 1]; }

 private:
  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(const std::vector<mpq_class>& cost, std::size_t limit) {
    std::vector<mpq_class> reduced(limit);
    for (std::size_t k = 0; k < limit; ++k) {
      mpq_class r = cost[k];
      for (std::size_t j = 0; j < rows_; ++j) {
        if (!kept_[j]) continue;
        const mpq_class& cb = basis_[j] < cost.size() ? cost[basis_[j]] : zero_;
        if (sgn(cb) != 0 && sgn(t_[j][k]) != 0) r -= cb * t_[j][k];
      }
      reduced[k] = r;
    }
    while (true) {
      std::size_t enter = limit;
      for (std::size_t k = 0; k < limit; ++k) {
        if (sgn(reduced[k]) < 0) {
          enter = k;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows_;
      mpq_class best;
      for (std::size_t j = 0; j < rows_; ++j) {
        if (!kept_[j] || sgn(t_[j][enter]) <= 0) continue;
        mpq_class ratio = t_[j][width_ - 1] / t_[j][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[j] < basis_[leave])) {
          leave = j;
          best = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter, &reduced);
    }
  }

  void pivot(std::size_t pr, std::size_t pc, std::vector<mpq_class>* reduced) {
    std::vector<mpq_class>& prow = t_[pr];
    mpq_class inv = 1 / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < width_; ++k) {
      if (sgn(prow[k]) != 0) {
        prow[k] *= inv;
        nz.push_back(k);
      }
    }
    for (std::size_t j = 0; j < rows_; ++j) {
      if (j == pr || sgn(t_[j][pc]) == 0) continue;
      mpq_class f = t_[j][pc];
      for (std::size_t k : nz) t_[j][k] -= f * prow[k];
    }
    if (reduced != nullptr && sgn((*reduced)[pc]) != 0) {
      mpq_class f = (*reduced)[pc];
      for (std::size_t k : nz) {
        if (k < reduced->size()) (*reduced)[k] -= f * prow[k];
      }
    }
    basis_[pr] = pc;
  }

  std::size_t rows_;
  std::size_t m_;
  std::size_t width_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> kept_;
  mpq_class zero_;
};

enum class StdStatus { Optimal, Infeasible, Unbounded };

struct StdSolution {
  StdStatus status;
  RatVec multipliers;  // π with E^T π <= d, when Optimal
  Rational value;      // d·z at optimum
};

StdSolution solve_standard(const std::vector<RatVec>& columns, const RatVec& rhs, const RatVec& d) {
  Tableau tab(columns, rhs);
  if (!tab.phase_one()) return {StdStatus::Infeasible, {}, {}};
  if (!tab.phase_two(d)) return {StdStatus::Unbounded, {}, {}};

  std::vector<std::size_t> kept_rows;
  for (std::size_t j = 0; j < tab.rows(); ++j) {
    if (tab.kept(j)) kept_rows.push_back(j);
  }
  std::size_t p = kept_rows.size();
  // Solve B^T π = d_B on the kept rows of the original system.
  Matrix bt(p, p);
  RatVec db(p);
  Rational value;
  for (std::size_t b = 0; b < p; ++b) {
    std::size_t col = tab.basic(kept_rows[b]);
    db[b] = d[col];
    value += d[col] * Rational(tab.value(kept_rows[b]));
    for (std::size_t a = 0; a < p; ++a) bt(b, a) = columns[col][kept_rows[a]];
  }
  auto pi_kept = solve(bt, db);
  if (!pi_kept) throw std::logic_error("lp_solve: singular optimal basis");
  RatVec pi(rhs.size());
  for (std::size_t a = 0; a < p; ++a) pi[kept_rows[a]] = (*pi_kept)[a];
  return {StdStatus::Optimal, std::move(pi), std::move(value)};
}

}  // namespace

LPResult lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables();
  RatVec c = lp.objective();
  if (lp.sense() == Sense::Maximize) c = -c;

  if (n == 0) {
    LPResult r;
    r.status = lp_feasible_point(lp, {}) ? LPStatus::Optimal : LPStatus::Infeasible;
    return r;
  }

  // Dual of  min c·x, a_i·x >= b_i (i ineq), a_i·x = b_i (i eq), x free:
  //   max b·y, A^T y = c, y_i >= 0 on inequality rows.
  // Posed in standard form as  min d·z, E z = c, z >= 0, whose optimal
  // multipliers π give the primal optimum x = -π.
  std::vector<RatVec> columns;
  RatVec d;
  columns.reserve(lp.constraints().size());
  for (const auto& con : lp.constraints()) {
    switch (con.relation) {
      case Relation::GreaterEqual:
        columns.push_back(con.coeffs);
        d.push_back(-con.bound);
        break;
      case Relation::LessEqual:
        columns.push_back(-con.coeffs);
        d.push_back(con.bound);
        break;
      case Relation::Equal:
        columns.push_back(con.coeffs);
        d.push_back(-con.bound);
        columns.push_back(-con.coeffs);
        d.push_back(con.bound);
        break;
    }
  }

  StdSolution dual = solve_standard(columns, c, d);
  LPResult result;
  switch (dual.status) {
    case StdStatus::Unbounded:
      result.status = LPStatus::Infeasible;
      return result;
    case StdStatus::Infeasible: {
      StdSolution probe = solve_standard(columns, RatVec(n), d);
      result.status = probe.status == StdStatus::Optimal ? LPStatus::Unbounded : LPStatus::Infeasible;
      return result;
    }
    case StdStatus::Optimal:
      break;
  }

  result.status = LPStatus::Optimal;
  result.witness = -dual.multipliers;
  Rational primal = dot(c, result.witness);
  if (primal != -dual.value || !lp_feasible_point(lp, result.witness)) {
    throw std::logic_error("lp_solve: certificate check failed");
  }
  result.optimum = lp.sense() == Sense::Maximize ? -primal : primal;
  return result;
}

}  // namespace polyban
