#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace fba {

using Complex = std::complex<double>;

/// Dense complex d x d matrix, an element of the coefficient algebra.
class BMatrix {
 public:
  explicit BMatrix(int d) : d_(d), a_(static_cast<size_t>(d) * d, Complex{0, 0}) {}

  static BMatrix identity(int d);
  static BMatrix zero(int d) { return BMatrix(d); }
  static BMatrix scalar(int d, Complex z);

  int dim() const { return d_; }
  Complex& at(int r, int c) { return a_[static_cast<size_t>(r) * d_ + c]; }
  const Complex& at(int r, int c) const { return a_[static_cast<size_t>(r) * d_ + c]; }
  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  BMatrix operator+(const BMatrix& o) const;
  BMatrix operator-(const BMatrix& o) const;
  BMatrix operator*(const BMatrix& o) const;
  BMatrix operator*(Complex z) const;
  BMatrix& operator+=(const BMatrix& o);
  BMatrix adjoint() const;

  double max_abs() const;
  bool is_identity(double tol = 1e-14) const;
  /// The scalar z with *this == z * I, when within tol of one.
  std::optional<Complex> as_scalar(double tol = 1e-12) const;

 private:
  int d_;
  std::vector<Complex> a_;
};

double max_abs_diff(const BMatrix& a, const BMatrix& b);

/// Smallest eigenvalue of the Hermitian part (m + m*)/2, by cyclic Jacobi.
double hermitian_min_eigenvalue(const BMatrix& m);

}  // namespace fba
