#pragma once

#include <array>
#include <string>

#include "hecurve/rational.hpp"

namespace hecurve {

/// Element of the generalized quaternion algebra (a,b / Q):
/// basis 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji.
class Quat {
 public:
  Quat() : a_(Rat(-1)), b_(Rat(-1)), c_{Rat(0), Rat(0), Rat(0), Rat(0)} {}
  Quat(Rat a, Rat b, std::array<Rat, 4> coords)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(coords)) {}
  static Quat scalar(const Rat& a, const Rat& b, const Rat& x) {
    return Quat(a, b, {x, Rat(0), Rat(0), Rat(0)});
  }

  const Rat& param_a() const { return a_; }
  const Rat& param_b() const { return b_; }
  const std::array<Rat, 4>& coords() const { return c_; }
  bool is_zero() const;

  Quat operator-() const;
  Quat operator+(const Quat& o) const;
  Quat operator-(const Quat& o) const;
  Quat operator*(const Quat& o) const;
  bool operator==(const Quat& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

  Quat conj() const;
  /// Reduced norm x * conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2.
  Rat norm() const;
  Quat inv() const;  // errors DivisionByZero when the norm vanishes

  std::string str() const;

 private:
  void check_params(const Quat& o) const {
    require(a_ == o.a_ && b_ == o.b_, Err::InvalidInput,
            "mixing quaternions from different algebras");
  }
  Rat a_, b_;
  std::array<Rat, 4> c_;
};

/// Hilbert symbol (a, b)_p over Q_p; p = 0 encodes the real place.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

/// Whether the quaternion algebra (a, b / Q) is a division algebra.
bool quaternion_is_division(const Rat& a, const Rat& b);

}  // namespace hecurve
