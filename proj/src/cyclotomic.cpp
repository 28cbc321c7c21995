#include "hecurve/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace hecurve {

int Cyc::phi(int n) {
  require(n >= 1, Err::InvalidInput, "conductor must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const Poly& Cyc::min_poly(int n) {
  static std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  RatVec xn(n + 1, Rat(0));
  xn[0] = Rat(-1);
  xn[n] = Rat(1);
  Poly num{RatVec(xn)};
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = num.divmod(min_poly(d));
    require(r.is_zero(), Err::InvalidInput, "cyclotomic polynomial division not exact");
    num = q;
  }
  return cache.emplace(n, num).first->second;
}

const std::vector<RatVec>& Cyc::power_table(int n) {
  static std::map<int, std::vector<RatVec>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  int d = phi(n);
  const Poly& mp = min_poly(n);
  std::vector<RatVec> tab;
  tab.reserve(2 * n);
  RatVec cur(d, Rat(0));
  cur[0] = Rat(1);
  tab.push_back(cur);
  for (int k = 1; k < 2 * n; ++k) {
    RatVec next(d, Rat(0));
    Rat top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = Rat(0);
    if (!top.is_zero()) {
      // x^d = -(mp - x^d)
      for (int i = 0; i < d; ++i) next[i] -= top * mp.coeff(i);
    }
    tab.push_back(next);
    cur = next;
  }
  return cache.emplace(n, std::move(tab)).first->second;
}

Cyc::Cyc(int conductor, RatVec coeffs) : n_(conductor), c_(std::move(coeffs)) {
  require(n_ >= 1, Err::InvalidInput, "conductor must be positive");
  require(static_cast<int>(c_.size()) == phi(n_), Err::InvalidInput,
          "coefficient vector length must equal phi(conductor)");
}

Cyc Cyc::zeta(int n) {
  int d = phi(n);
  RatVec c(d, Rat(0));
  if (d == 1) {
    // zeta_1 = 1, zeta_2 = -1
    c[0] = (n == 1) ? Rat(1) : Rat(-1);
  } else {
    c[1] = Rat(1);
  }
  return Cyc(n, std::move(c));
}

bool Cyc::contains_root(int conductor, int k) {
  if (k <= 0) return false;
  if (conductor % k == 0) return true;
  if (k % 2 == 0 && (k / 2) % 2 == 1 && conductor % (k / 2) == 0) return true;
  return false;
}

Cyc Cyc::root_of_unity(int k, int conductor) {
  require(contains_root(conductor, k), Err::ConductorTooSmall,
          "Q(zeta_" + std::to_string(conductor) + ") has no primitive " + std::to_string(k) +
              "-th root of unity");
  if (conductor % k == 0) {
    const auto& tab = power_table(conductor);
    return Cyc(conductor, tab[(conductor / k) % conductor]);
  }
  // k = 2j with j odd: zeta_2j = -zeta_j^{(j+1)/2}
  int j = k / 2;
  Cyc zj = root_of_unity(j, conductor);
  Cyc r = Cyc(Rat(1)).lift(conductor);
  for (int t = 0; t < (j + 1) / 2; ++t) r = r * zj;
  return -r;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyc::rational_part() const {
  require(is_rational(), Err::InvalidInput, "element is not rational");
  return c_[0];
}

Cyc Cyc::lift(int m) const {
  if (m == n_) return *this;
  Cyc r = root_of_unity(n_, m);
  int dm = phi(m);
  RatVec acc(dm, Rat(0));
  // Horner over the power basis of the source conductor.
  Cyc pow(m, [&] {
    RatVec one(dm, Rat(0));
    one[0] = Rat(1);
    return one;
  }());
  for (size_t t = 0; t < c_.size(); ++t) {
    if (!c_[t].is_zero()) {
      for (int i = 0; i < dm; ++i) acc[i] += c_[t] * pow.c_[i];
    }
    if (t + 1 < c_.size()) pow = pow * r;
  }
  return Cyc(m, std::move(acc));
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  require(n_ == o.n_, Err::ConductorMismatch, "addition across conductors");
  Cyc r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  require(n_ == o.n_, Err::ConductorMismatch, "subtraction across conductors");
  Cyc r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  require(n_ == o.n_, Err::ConductorMismatch, "multiplication across conductors");
  int d = static_cast<int>(c_.size());
  const auto& tab = power_table(n_);
  RatVec acc(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j].is_zero()) continue;
      Rat prod = c_[i] * o.c_[j];
      const RatVec& red = tab[i + j];
      for (int k = 0; k < d; ++k) acc[k] += prod * red[k];
    }
  }
  return Cyc(n_, std::move(acc));
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  int m = common_conductor(n_, o.n_);
  return lift(m).c_ == o.lift(m).c_;
}

Cyc Cyc::galois(int a) const {
  a = ((a % n_) + n_) % n_;
  require(std::gcd(a, n_) == 1, Err::InvalidInput, "galois exponent not coprime to conductor");
  const auto& tab = power_table(n_);
  int d = static_cast<int>(c_.size());
  RatVec acc(d, Rat(0));
  for (int t = 0; t < d; ++t) {
    if (c_[t].is_zero()) continue;
    const RatVec& red = tab[(static_cast<long>(t) * a) % n_];
    for (int k = 0; k < d; ++k) acc[k] += c_[t] * red[k];
  }
  return Cyc(n_, std::move(acc));
}

Cyc Cyc::conj() const {
  if (n_ <= 2) return *this;
  return galois(n_ - 1);
}

Cyc Cyc::inv() const {
  require(!is_zero(), Err::DivisionByZero, "inverse of zero cyclotomic element");
  // Extended Euclid in Q[x] against the minimal polynomial.
  Poly f{RatVec(c_)};
  Poly g = min_poly(n_);
  Poly r0 = g, r1 = f;
  Poly s0, s1 = Poly::constant(Rat(1));  // s tracks the f-cofactor
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  require(r0.degree() == 0, Err::InvalidInput, "element not invertible modulo cyclotomic polynomial");
  Rat lead = r0.coeff(0);
  int d = static_cast<int>(c_.size());
  RatVec out(d, Rat(0));
  for (int i = 0; i <= s0.degree() && i < d; ++i) out[i] = s0.coeff(i) / lead;
  // s0 may exceed the basis degree only if f was unreduced; reduce defensively.
  for (int i = d; i <= s0.degree(); ++i) {
    const RatVec& red = power_table(n_)[i];
    for (int k = 0; k < d; ++k) out[k] += (s0.coeff(i) / lead) * red[k];
  }
  return Cyc(n_, std::move(out));
}

std::string Cyc::str() const {
  if (is_rational()) return c_[0].str();
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].str();
  }
  os << "]@" << n_;
  return os.str();
}

Cyc cyc_arith(const Cyc& a, const Cyc& b, CycOp op) {
  switch (op) {
    case CycOp::Add:
      require(a.conductor() == b.conductor(), Err::ConductorMismatch, "cyc_arith add");
      return a + b;
    case CycOp::Mul:
      require(a.conductor() == b.conductor(), Err::ConductorMismatch, "cyc_arith mul");
      return a * b;
    case CycOp::Inv:
      return a.inv();
  }
  fail(Err::InvalidInput, "unknown cyclotomic operation");
}

int common_conductor(int a, int b) {
  int m = std::lcm(a, b);
  if (m % 4 == 2) m /= 2;
  return m;
}

std::vector<Cyc> cyc_vec(std::initializer_list<long> xs) {
  std::vector<Cyc> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace hecurve
