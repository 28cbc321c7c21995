#pragma once

#include <string>
#include <vector>

#include "hecurve/rational.hpp"

namespace hecurve {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// Normalized: no trailing zero coefficients (zero polynomial = empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& r);
  static Poly monomial(const Rat& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const RatVec& coeffs() const { return c_; }
  Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }
  bool is_monic() const { return !is_zero() && c_.back().is_one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  /// Quotient and remainder by a nonzero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  Rat eval(const Rat& x) const;

  /// Human-readable form like "t^2 - 2t + 1" (highest degree first).
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  RatVec c_;
};

}  // namespace hecurve
