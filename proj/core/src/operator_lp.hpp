#pragma once

#include <optional>

#include "polyban/lp.hpp"
#include "polyban/matrix.hpp"
#include "polyban/space.hpp"

namespace polyban::detail {

/// A block of LP variables holding a rows × cols matrix, row-major.
struct MatrixVar {
  std::size_t offset = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t size() const { return rows * cols; }
  std::size_t at(std::size_t r, std::size_t c) const { return offset + r * cols + c; }
  Matrix extract(const RatVec& x) const;
};

/// For every probe v and every facet ψ of target, adds
///   ψ(T·R·v − C·v) ≤ bound + s
/// where R defaults to the identity, C to zero, and s is the variable at
/// s_index (omitted when absent).
void add_ball_constraints(LinearProgram& lp, const MatrixVar& T, const Matrix* right, const Matrix* constant,
                          const PolyhedralSpace& target, const std::vector<RatVec>& probes,
                          std::optional<std::size_t> s_index, const Rational& bound);

/// Adds the equations T·R = C entrywise.
void add_matrix_equations(LinearProgram& lp, const MatrixVar& T, const Matrix& right, const Matrix& constant);

}  // namespace polyban::detail
