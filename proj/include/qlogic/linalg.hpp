#pragma once

#include "qlogic/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

namespace qlogic {

using RatVector = std::vector<Rational>;

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  // Throws std::invalid_argument if the rows have different lengths.
  explicit RatMatrix(const std::vector<RatVector>& rows);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatVector multiply(const RatMatrix& a, const RatVector& x);
// y^T A, a row vector of length cols(A).
RatVector left_multiply(const RatVector& y, const RatMatrix& a);
Rational dot(const RatVector& x, const RatVector& y);
bool is_zero(const RatVector& v);

// Scales v to the smallest integer vector on the same ray, with the first
// nonzero entry positive. The zero vector is returned unchanged.
RatVector normalize_integer_vector(const RatVector& v);

struct AffineSolution {
  RatVector particular;                 // free variables set to zero
  std::vector<RatVector> nullspace_basis;  // one per free column, integer-normalized
  std::size_t rank = 0;
};

struct AffineInconsistent {
  // y with y^T A = 0 and y^T b != 0, normalized per normalize_integer_vector.
  RatVector certificate;
};

using AffineOutcome = std::variant<AffineSolution, AffineInconsistent>;

// Exact Gauss-Jordan elimination of A x = b. Pivot columns are taken left to
// right, the pivot row is the first remaining row with a nonzero entry.
// Throws std::invalid_argument when rows(A) != size(b).
AffineOutcome solve_affine(const RatMatrix& a, const RatVector& b);

struct NonnegResult {
  std::optional<RatVector> witness;  // x >= 0 with A x = b, when one exists
  std::size_t pivots = 0;            // simplex pivots performed

  bool feasible() const { return witness.has_value(); }
};

// Decides whether A x = b has a solution with x >= 0 componentwise. The
// system is first reduced to independent rows by elimination, then phase-1
// simplex with Bland's rule runs on the reduced system. Throws
// std::invalid_argument on a shape mismatch and std::runtime_error if the
// pivot count exceeds binomial(rows + cols, rows).
NonnegResult nonneg_feasible(const RatMatrix& a, const RatVector& b);

}  // namespace qlogic
