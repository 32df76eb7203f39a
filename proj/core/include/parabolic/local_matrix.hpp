#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "parabolic/laurent.hpp"

namespace parabolic {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using LaurentMatrix = Matrix<Laurent>;
using IntMatrix = Matrix<int>;

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix scaled(const LaurentMatrix& a, const Laurent& c);
LaurentMatrix power(const LaurentMatrix& a, unsigned exponent);

// (a kron b)(tau(i,k), tau(j,l)) = a(i,j) b(k,l).
LaurentMatrix kron(const LaurentMatrix& a, const LaurentMatrix& b);

Laurent determinant(const LaurentMatrix& a);
LaurentMatrix adjugate(const LaurentMatrix& a);

// Smallest valuation over nonzero entries; empty for the zero matrix.
std::optional<long long> min_valuation(const LaurentMatrix& a);
bool is_integral(const LaurentMatrix& a);
// Integral with positive valuation strictly below the diagonal.
bool is_parabolic(const LaurentMatrix& a);
// Parabolic with determinant a unit of the local ring.
bool is_parabolic_invertible(const LaurentMatrix& a);

enum class FactorRing { rational, polynomial, laurent };

struct OuterFactors {
  std::vector<Laurent> column;
  std::vector<Laurent> row;
};

// M = column * row when every 2x2 minor vanishes, by gcd splitting of the
// first nonzero row. Throws DomainError("ring") when an entry is outside the
// requested ring.
std::optional<OuterFactors> rank1_factor(const LaurentMatrix& m, FactorRing ring);
bool all_minors_vanish(const LaurentMatrix& m);

// 0-based tau(i,j) = i n + j.
struct IndexMaps {
  std::size_t n;

  std::size_t tau(std::size_t i, std::size_t j) const { return i * n + j; }
  std::pair<std::size_t, std::size_t> tau_inverse(std::size_t a) const { return {a / n, a % n}; }
  // Position (tau(i,j), tau(k,l)) goes to (tau(i,k), tau(l,j)).
  std::pair<std::size_t, std::size_t> sigma(std::size_t row, std::size_t col) const;
  std::pair<std::size_t, std::size_t> sigma_inverse(std::size_t row, std::size_t col) const;
};

LaurentMatrix sigma_apply(const LaurentMatrix& m);
// Row-major flattening of a square matrix into a column vector.
std::vector<Laurent> tau_vector(const LaurentMatrix& a);
LaurentMatrix tau_unflatten(const std::vector<Laurent>& v, std::size_t n);

IntMatrix xi_matrix(std::size_t n);

LaurentMatrix mp_matrix(const LaurentMatrix& a, const LaurentMatrix& b);

bool is_pure_tensor(const LaurentMatrix& m);
std::optional<LaurentMatrix> is_inner(const LaurentMatrix& m);

LaurentMatrix hecke_matrix(std::size_t n);
LaurentMatrix hecke_matrix_inverse(std::size_t n);

struct HeckeConjugationReport {
  LaurentMatrix mp;  // MP(A, A^-1) restricted to exponents below exact_below
  long long exact_below = std::numeric_limits<long long>::max();
  bool integral = false;
  bool preserves_parabolic = false;
  bool a_parabolic = false;
  long long det_valuation = 0;
  long long hecke_power = 0;
  bool decomposition_verified = false;
};

HeckeConjugationReport hecke_conjugation_check(const LaurentMatrix& a, long long precision);

}  // namespace parabolic
