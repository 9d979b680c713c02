#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace stirap {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  std::vector<Complex> apply(std::span<const Complex> vec) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest |a_ij - b_ij|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |M_ij - conj(M_ji)| together with the offending position.
struct HermiticityDefect {
  double deviation = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};
HermiticityDefect hermiticity_defect(const ComplexMatrix& m);

/// Tolerance used to accept a matrix as Hermitian: 1e-12 * (1 + max|M|).
bool is_hermitian(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi diagonalization of a small Hermitian matrix.
///
/// Throws std::invalid_argument when the input is not Hermitian within
/// 1e-12 * (1 + max|M|); the message names the worst entry.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// V diag(values) V^dagger.
ComplexMatrix reconstruct(const EigenSystem& es);

}  // namespace stirap
