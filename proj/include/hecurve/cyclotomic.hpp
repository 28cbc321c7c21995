#pragma once

#include <string>
#include <vector>

#include "hecurve/poly.hpp"
#include "hecurve/rational.hpp"

namespace hecurve {

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// zeta^0 .. zeta^{phi(n)-1} for a fixed conductor n. Every operation keeps
/// the representation reduced modulo the n-th cyclotomic polynomial.
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}
  Cyc(long r) : n_(1), c_(1, Rat(r)) {}  // NOLINT: implicit rational embedding
  Cyc(const Rat& r) : n_(1), c_(1, r) {}  // NOLINT
  Cyc(int conductor, RatVec coeffs);

  static int phi(int n);
  /// Monic n-th cyclotomic polynomial.
  static const Poly& min_poly(int n);
  /// zeta_n as an element of Q(zeta_n).
  static Cyc zeta(int n);
  /// Whether Q(zeta_conductor) contains a primitive k-th root of unity.
  static bool contains_root(int conductor, int k);
  /// A primitive k-th root of unity inside Q(zeta_conductor); errors with
  /// ConductorTooSmall when absent.
  static Cyc root_of_unity(int k, int conductor);

  int conductor() const { return n_; }
  const RatVec& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // requires is_rational()

  /// Re-express in conductor m (requires embeddability; errors otherwise).
  Cyc lift(int m) const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc inv() const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyc conj() const;
  /// Galois action zeta -> zeta^a, gcd(a, n) = 1.
  Cyc galois(int a) const;

  std::string str() const;

 private:
  static const std::vector<RatVec>& power_table(int n);
  Cyc reduced(int n, RatVec raw_powers);  // reduce coefficients of zeta^0..zeta^{k}

  int n_;
  RatVec c_;
};

enum class CycOp { Add, Mul, Inv };

/// Dispatcher with the conductor-equality precondition.
Cyc cyc_arith(const Cyc& a, const Cyc& b, CycOp op);

/// Smallest common conductor both elements embed into.
int common_conductor(int a, int b);

std::vector<Cyc> cyc_vec(std::initializer_list<long> xs);

}  // namespace hecurve
