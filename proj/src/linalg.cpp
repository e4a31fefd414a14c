#include "qlogic/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qlogic {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(const std::vector<RatVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RatMatrix([&] {
        std::vector<RatVector> v;
        for (const auto& r : rows) v.emplace_back(r);
        return v;
      }()) {}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector multiply(const RatMatrix& a, const RatVector& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("multiply: shape mismatch");
  RatVector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (sgn(a(r, c)) != 0) y[r] += a(r, c) * x[c];
  return y;
}

RatVector left_multiply(const RatVector& y, const RatMatrix& a) {
  if (y.size() != a.rows()) throw std::invalid_argument("left_multiply: shape mismatch");
  RatVector z(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (sgn(y[r]) == 0) continue;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (sgn(a(r, c)) != 0) z[c] += y[r] * a(r, c);
  }
  return z;
}

Rational dot(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatVector normalize_integer_vector(const RatVector& v) {
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (first == v.end()) return v;

  mpz_class denominators = 1;
  for (const auto& q : v) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), q.get_den_mpz_t());
  mpz_class numerators = 0;
  for (const auto& q : v) {
    const mpz_class scaled = q.get_num() * (denominators / q.get_den());
    mpz_gcd(numerators.get_mpz_t(), numerators.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(denominators, numerators);
  factor.canonicalize();
  if (sgn(*first) < 0) factor = -factor;

  RatVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q * factor);
  return out;
}

namespace {

// In-place Gauss-Jordan on m, choosing pivots only among the first
// `pivot_limit` columns. Returns the pivot columns; pivot row i holds a one
// in column pivots[i] and every other row is zero there.
std::vector<std::size_t> gauss_jordan(RatMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  const std::size_t width = m.cols();
  for (std::size_t c = 0; c < pivot_limit && pivots.size() < m.rows(); ++c) {
    const std::size_t rank = pivots.size();
    std::size_t p = rank;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != rank)
      for (std::size_t j = 0; j < width; ++j) std::swap(m(p, j), m(rank, j));

    const Rational inv = 1 / m(rank, c);
    support.clear();
    for (std::size_t j = c; j < width; ++j) {
      if (sgn(m(rank, j)) == 0) continue;
      m(rank, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j : support) m(r, j) -= f * m(rank, j);
    }
    pivots.push_back(c);
  }
  return pivots;
}

RatMatrix augmented(const RatMatrix& a, const RatVector& b, bool with_identity) {
  const std::size_t extra = with_identity ? a.rows() : 0;
  RatMatrix m(a.rows(), a.cols() + 1 + extra);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    m(r, a.cols()) = b[r];
    if (with_identity) m(r, a.cols() + 1 + r) = 1;
  }
  return m;
}

std::size_t saturating_binomial(std::size_t n, std::size_t k) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = n - k + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;  // exact: C(n-k+i, i) is an integer
  }
  return result;
}

}  // namespace

AffineOutcome solve_affine(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_affine: rows(A) != size(b)");
  const std::size_t n = a.cols();

  RatMatrix m = augmented(a, b, false);
  const auto pivots = gauss_jordan(m, n);
  const std::size_t rank = pivots.size();

  bool consistent = true;
  for (std::size_t r = rank; r < m.rows() && consistent; ++r) consistent = sgn(m(r, n)) == 0;

  if (!consistent) {
    // Redo with the identity block to recover which combination of the
    // original rows produced the contradiction.
    RatMatrix book = augmented(a, b, true);
    const auto again = gauss_jordan(book, n);
    for (std::size_t r = again.size(); r < book.rows(); ++r) {
      if (sgn(book(r, n)) == 0) continue;
      RatVector y(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) y[i] = book(r, n + 1 + i);
      return AffineInconsistent{normalize_integer_vector(y)};
    }
    throw std::logic_error("solve_affine: elimination passes disagree");
  }

  AffineSolution sol;
  sol.rank = rank;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    sol.particular[pivots[i]] = m(i, n);
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -m(i, f);
    sol.nullspace_basis.push_back(normalize_integer_vector(v));
  }
  return sol;
}

NonnegResult nonneg_feasible(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("nonneg_feasible: rows(A) != size(b)");
  const std::size_t n = a.cols();

  RatMatrix reduced = augmented(a, b, false);
  const std::size_t rows = gauss_jordan(reduced, n).size();
  for (std::size_t r = rows; r < reduced.rows(); ++r)
    if (sgn(reduced(r, n)) != 0) return {};

  // Phase-1 tableau: n structural columns, one artificial per row, rhs last.
  const std::size_t width = n + rows + 1;
  const std::size_t rhs = width - 1;
  RatMatrix t(rows, width);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = sgn(reduced(i, n)) < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-reduced(i, j)) : reduced(i, j);
    t(i, rhs) = flip ? Rational(-reduced(i, n)) : reduced(i, n);
    t(i, n + i) = 1;
    basis[i] = n + i;
  }
  // Reduced costs of "minimize the sum of artificials".
  RatVector cost(width);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t(i, j);
    cost[rhs] -= t(i, rhs);
  }

  const std::size_t cap = saturating_binomial(n + rows, rows);
  NonnegResult result;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave == rows) throw std::logic_error("nonneg_feasible: phase-1 objective unbounded");

    if (++result.pivots > cap) throw std::runtime_error("nonneg_feasible: simplex pivot cap exceeded");

    const Rational inv = 1 / t(leave, enter);
    for (std::size_t j = 0; j < width; ++j)
      if (sgn(t(leave, j)) != 0) t(leave, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t(leave, j)) != 0) t(i, j) -= f * t(leave, j);
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t(leave, j)) != 0) cost[j] -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  Rational infeasibility = 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] >= n) infeasibility += t(i, rhs);
  if (sgn(infeasibility) != 0) return result;

  RatVector x(n);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, rhs);
  result.witness = std::move(x);
  return result;
}

}  // namespace qlogic
