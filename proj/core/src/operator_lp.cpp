#include "operator_lp.hpp"

namespace polyban::detail {

Matrix MatrixVar::extract(const RatVec& x) const {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = x[at(r, c)];
  return m;
}

void add_ball_constraints(LinearProgram& lp, const MatrixVar& T, const Matrix* right, const Matrix* constant,
                          const PolyhedralSpace& target, const std::vector<RatVec>& probes,
                          std::optional<std::size_t> s_index, const Rational& bound) {
  for (const auto& v : probes) {
    const RatVec rv = right ? right->apply(v) : v;
    const RatVec cv = constant ? constant->apply(v) : RatVec{};
    for (const auto& psi : target.facets()) {
      RatVec row(lp.variables());
      for (std::size_t k = 0; k < T.rows; ++k) {
        if (psi[k].is_zero()) continue;
        for (std::size_t i = 0; i < T.cols; ++i) row[T.at(k, i)] += psi[k] * rv[i];
      }
      Rational rhs = bound;
      if (constant) rhs += dot(psi, cv);
      if (s_index) row[*s_index] -= 1;
      lp.add_constraint(std::move(row), Relation::LessEqual, std::move(rhs));
    }
  }
}

void add_matrix_equations(LinearProgram& lp, const MatrixVar& T, const Matrix& right, const Matrix& constant) {
  for (std::size_t k = 0; k < T.rows; ++k) {
    for (std::size_t j = 0; j < right.cols(); ++j) {
      RatVec row(lp.variables());
      for (std::size_t i = 0; i < T.cols; ++i) row[T.at(k, i)] = right(i, j);
      lp.add_constraint(std::move(row), Relation::Equal, constant(k, j));
    }
  }
}

}  // namespace polyban::detail
