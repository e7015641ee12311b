#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyban/rational.hpp"

namespace polyban {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };

struct LinearConstraint {
  RatVec coeffs;
  Relation relation;
  Rational bound;
};

/// A linear program over free (unrestricted) rational variables. Sign
/// restrictions are expressed as ordinary constraints.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables);

  std::size_t variables() const { return variables_; }
  Sense sense() const { return sense_; }
  const RatVec& objective() const { return objective_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  /// Throws Error(MalformedProgram) when the coefficient count is wrong.
  void set_objective(RatVec coeffs, Sense sense);
  void add_constraint(RatVec coeffs, Relation rel, Rational bound);
  void add_constraint(LinearConstraint c);
  /// Convenience: x_index >= lower.
  void add_lower_bound(std::size_t index, Rational lower);

 private:
  void check_length(const RatVec& coeffs) const;

  std::size_t variables_;
  Sense sense_ = Sense::Minimize;
  RatVec objective_;
  std::vector<LinearConstraint> constraints_;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational optimum;  // meaningful when Optimal
  RatVec witness;    // meaningful when Optimal

  bool optimal() const { return status == LPStatus::Optimal; }
};

/// Exact simplex with Bland's pivoting rule. Deterministic for a fixed
/// program. The returned witness satisfies every constraint exactly and
/// attains the optimum.
LPResult lp_solve(const LinearProgram& lp);

/// True when `x` satisfies every constraint of `lp` (exact comparison).
bool lp_feasible_point(const LinearProgram& lp, const RatVec& x);

}  // namespace polyban
