#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyban/purity.hpp"

namespace polyban {

/// A rational-linear combination Σ free[i]·x_{i+1} + Σ bound[j]·y_{j+1}.
struct Term {
  RatVec free;
  RatVec bound;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class AtomKind { Eq, NormLe };

/// Eq: lhs = rhs. NormLe: ‖lhs‖ <= bound (rhs unused).
struct Atom {
  AtomKind kind = AtomKind::Eq;
  Term lhs;
  Term rhs;
  Rational bound;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// (∃ y_1 … y_m) ⋀ atoms, with free variables x_1 … x_n.
struct PPFormula {
  std::size_t free_count = 0;
  std::size_t bound_count = 0;
  std::vector<Atom> atoms;

  friend bool operator==(const PPFormula&, const PPFormula&) = default;
};

/// Grammar:
///   formula := [ "EXISTS" name ("," name)* "." ] atom ("AND" atom)*
///   atom    := "norm" "(" expr ")" "<=" rational | expr "=" expr
///   expr    := linear combination of x1, x2, … and the declared names,
///              with rational literals p or p/q, "*", "+", "-" and parentheses
/// Constants other than 0 are not part of the language. Throws SyntaxError
/// (with line and column) or ScopeError. free_count, when given, must be at
/// least the largest free index used.
PPFormula parse_formula(std::string_view text, std::optional<std::size_t> free_count = std::nullopt);

/// Prints in the grammar above, naming bound variables y1 … ym.
std::string to_string(const PPFormula& phi);

/// Replaces every bound M in a norm atom by M + eps.
PPFormula approximate(const PPFormula& phi, const Rational& eps);

enum class SlackKind {
  Finite,         // value holds the minimum
  SlackFree,      // no norm atoms and the equations are solvable
  Unsatisfiable,  // the equations have no solution
};

struct Slack {
  SlackKind kind = SlackKind::Finite;
  Rational value;
  /// Values of the bound variables at the optimum (when solvable).
  std::vector<RatVec> bound_witness;

  bool satisfied() const { return satisfied_within(0); }
  /// The eps-approximation of the formula holds.
  bool satisfied_within(const Rational& eps) const {
    return kind == SlackKind::SlackFree || (kind == SlackKind::Finite && value <= eps);
  }
};

std::string to_string(const Slack& s);

/// min over bound assignments satisfying the equations of
/// max over norm atoms of (‖t‖ − M). Throws DimensionMismatch when the
/// assignment does not have free_count vectors of dimension dim K.
Slack satisfaction_slack(const PolyhedralSpace& K, const PPFormula& phi, const std::vector<RatVec>& assignment);

/// The atoms ‖Σ v_i x_i‖ <= 1 for each vertex v of Ball_A.
PPFormula presentation_formula(const PolyhedralSpace& A);

struct TransferResult {
  Slack in_sub;      // evaluated in K
  Slack in_ambient;  // evaluated in L at the pushed-forward assignment
};

/// Evaluates phi in K and in L. Assignment vectors tagged with L are pulled
/// back into K (AssignmentNotInSubspace if they are not in f[K]).
TransferResult transfer_check(const Embedding& e, const PPFormula& phi, const std::vector<Vector>& assignment);

struct Distinguisher {
  PPFormula formula;
  std::vector<RatVec> assignment;  // in K coordinates
};

/// The presentation formula of L in a basis extending f[K], with the
/// complement variables bound and the assignment the unit vectors of K.
/// Its slack is 0 in L and equals the ideal defect in K.
/// Throws IsActuallyIdeal when the ideal defect is 0.
Distinguisher distinguishing_formula(const Embedding& e);

}  // namespace polyban
