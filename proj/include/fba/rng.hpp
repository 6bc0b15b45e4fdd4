#pragma once

#include <cstdint>
#include <random>

#include "fba/bmatrix.hpp"

namespace fba {

/// Deterministic random source; everything downstream draws from one of
/// these, seeded once per run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }

  /// Standard complex normal (unit total variance), magnitude clamped at 2
  /// to keep operator norms tame.
  Complex complex_normal() {
    Complex z{normal() * kInvSqrt2, normal() * kInvSqrt2};
    double a = std::abs(z);
    if (a > 2.0) z *= 2.0 / a;
    return z;
  }

  BMatrix matrix(int d) {
    BMatrix m(d);
    for (auto& z : m.data()) z = complex_normal();
    return m;
  }

  BMatrix hermitian(int d) {
    BMatrix m = matrix(d);
    return (m + m.adjoint()) * Complex{0.5, 0};
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  static constexpr double kInvSqrt2 = 0.7071067811865476;
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace fba
