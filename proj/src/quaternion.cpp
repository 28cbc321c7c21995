#include "hecurve/quaternion.hpp"

#include <sstream>
#include <vector>

namespace hecurve {

bool Quat::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Quat Quat::operator-() const {
  Quat r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Quat Quat::operator+(const Quat& o) const {
  check_params(o);
  Quat r(*this);
  for (int i = 0; i < 4; ++i) r.c_[i] += o.c_[i];
  return r;
}

Quat Quat::operator-(const Quat& o) const {
  check_params(o);
  Quat r(*this);
  for (int i = 0; i < 4; ++i) r.c_[i] -= o.c_[i];
  return r;
}

Quat Quat::operator*(const Quat& o) const {
  check_params(o);
  const Rat& a = a_;
  const Rat& b = b_;
  const auto& x = c_;
  const auto& y = o.c_;
  std::array<Rat, 4> r;
  Rat ab = a * b;
  // Multiplication table: i^2=a, j^2=b, k=ij, k^2=-ab, ik=aj, ki=-aj, jk=-bi, kj=bi.
  r[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - ab * x[3] * y[3];
  r[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
  r[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
  r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return Quat(a, b, std::move(r));
}

Quat Quat::conj() const {
  return Quat(a_, b_, {c_[0], -c_[1], -c_[2], -c_[3]});
}

Rat Quat::norm() const {
  return c_[0] * c_[0] - a_ * c_[1] * c_[1] - b_ * c_[2] * c_[2] + a_ * b_ * c_[3] * c_[3];
}

Quat Quat::inv() const {
  Rat n = norm();
  require(!n.is_zero(), Err::DivisionByZero, "quaternion with zero norm");
  Quat c = conj();
  Rat ninv = n.inv();
  for (auto& x : c.c_) x *= ninv;
  return c;
}

std::string Quat::str() const {
  std::ostringstream os;
  os << "(" << c_[0].str() << "," << c_[1].str() << "," << c_[2].str() << "," << c_[3].str()
     << ")";
  return os.str();
}

namespace {

// Square-free integer representative of a nonzero rational class mod squares.
mpz_class squarefree_rep(const Rat& a) {
  mpz_class n = a.num() * a.den();
  mpz_class out = (sgn(n) < 0) ? mpz_class(-1) : mpz_class(1);
  n = abs(n);
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  out *= n;
  return out;
}

std::vector<long> odd_prime_factors(mpz_class n) {
  std::vector<long> ps;
  n = abs(n);
  while (n % 2 == 0) n /= 2;
  for (mpz_class p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      ps.push_back(p.get_si());
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n.get_si());
  return ps;
}

int legendre(mpz_class a, long p) {
  mpz_class pz(p);
  a %= pz;
  if (a < 0) a += pz;
  if (a == 0) return 0;
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

}  // namespace

int hilbert_symbol(const Rat& a_in, const Rat& b_in, long p) {
  require(!a_in.is_zero() && !b_in.is_zero(), Err::InvalidInput, "hilbert symbol of zero");
  mpz_class a = squarefree_rep(a_in);
  mpz_class b = squarefree_rep(b_in);
  if (p == 0) {  // real place
    return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  }
  auto val = [&](mpz_class& x) {
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  mpz_class u = a, w = b;
  int alpha = val(u), beta = val(w);
  if (p == 2) {
    auto eps = [](const mpz_class& x) { return ((x - 1) / 2) % 2 != 0 ? 1 : 0; };
    auto omega = [](const mpz_class& x) { return ((x * x - 1) / 8) % 2 != 0 ? 1 : 0; };
    int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int sign = 1;
  if (alpha % 2 == 1 && beta % 2 == 1 && ((p - 1) / 2) % 2 == 1) sign = -sign;
  if (beta % 2 == 1 && legendre(u, p) == -1) sign = -sign;
  if (alpha % 2 == 1 && legendre(w, p) == -1) sign = -sign;
  return sign;
}

bool quaternion_is_division(const Rat& a, const Rat& b) {
  require(!a.is_zero() && !b.is_zero(), Err::InvalidInput, "degenerate quaternion parameters");
  if (hilbert_symbol(a, b, 0) == -1) return true;
  if (hilbert_symbol(a, b, 2) == -1) return true;
  mpz_class prod = squarefree_rep(a) * squarefree_rep(b);
  for (long p : odd_prime_factors(prod)) {
    if (hilbert_symbol(a, b, p) == -1) return true;
  }
  return false;
}

}  // namespace hecurve
