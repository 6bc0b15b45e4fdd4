#include "fba/bmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fba {

BMatrix BMatrix::identity(int d) {
  BMatrix m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

BMatrix BMatrix::scalar(int d, Complex z) {
  BMatrix m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = z;
  return m;
}

BMatrix BMatrix::operator+(const BMatrix& o) const {
  if (d_ != o.d_) throw std::invalid_argument("matrix add: dimension mismatch");
  BMatrix r(d_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

BMatrix BMatrix::operator-(const BMatrix& o) const {
  if (d_ != o.d_) throw std::invalid_argument("matrix sub: dimension mismatch");
  BMatrix r(d_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

BMatrix BMatrix::operator*(const BMatrix& o) const {
  if (d_ != o.d_) throw std::invalid_argument("matrix mul: dimension mismatch");
  BMatrix r(d_);
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k) {
      Complex x = at(i, k);
      if (x == Complex{0, 0}) continue;
      for (int j = 0; j < d_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

BMatrix BMatrix::operator*(Complex z) const {
  BMatrix r(d_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * z;
  return r;
}

BMatrix& BMatrix::operator+=(const BMatrix& o) {
  if (d_ != o.d_) throw std::invalid_argument("matrix add: dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

BMatrix BMatrix::adjoint() const {
  BMatrix r(d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) r.at(j, i) = std::conj(at(i, j));
  return r;
}

double BMatrix::max_abs() const {
  double m = 0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

bool BMatrix::is_identity(double tol) const {
  return max_abs_diff(*this, identity(d_)) <= tol;
}

std::optional<Complex> BMatrix::as_scalar(double tol) const {
  Complex z = at(0, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      Complex want = i == j ? z : Complex{0, 0};
      if (std::abs(at(i, j) - want) > tol) return std::nullopt;
    }
  return z;
}

double max_abs_diff(const BMatrix& a, const BMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0;
  for (size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double hermitian_min_eigenvalue(const BMatrix& m) {
  int d = m.dim();
  // Work on the Hermitian part.
  BMatrix h(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  if (d == 1) return h.at(0, 0).real();

  // Cyclic Jacobi with complex rotations annihilating h(p,q).
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off = std::max(off, std::abs(h.at(p, q)));
    if (off < 1e-15) break;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) {
        Complex hpq = h.at(p, q);
        double apq = std::abs(hpq);
        if (apq < 1e-18) continue;
        double app = h.at(p, p).real();
        double aqq = h.at(q, q).real();
        double tau = (aqq - app) / (2 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1 / std::sqrt(1 + t * t);
        double s = t * c;
        Complex phase = hpq / apq;
        // Rotate columns/rows p,q: G = [[c, s*phase],[-s*conj(phase), c]].
        for (int k = 0; k < d; ++k) {
          Complex hkp = h.at(k, p), hkq = h.at(k, q);
          h.at(k, p) = c * hkp - s * std::conj(phase) * hkq;
          h.at(k, q) = s * phase * hkp + c * hkq;
        }
        for (int k = 0; k < d; ++k) {
          Complex hpk = h.at(p, k), hqk = h.at(q, k);
          h.at(p, k) = c * hpk - s * phase * hqk;
          h.at(q, k) = s * std::conj(phase) * hpk + c * hqk;
        }
      }
  }
  double mn = h.at(0, 0).real();
  for (int i = 1; i < d; ++i) mn = std::min(mn, h.at(i, i).real());
  return mn;
}

}  // namespace fba
