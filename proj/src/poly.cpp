#include "hecurve/poly.hpp"

#include <sstream>

namespace hecurve {

Poly Poly::constant(const Rat& r) { return Poly(RatVec{r}); }

Poly Poly::monomial(const Rat& c, int deg) {
  RatVec v(deg + 1, Rat(0));
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  RatVec r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  require(!d.is_zero(), Err::DivisionByZero, "polynomial division by zero");
  RatVec rem = c_;
  int dd = d.degree();
  Rat lead = d.leading();
  if (static_cast<int>(rem.size()) - 1 < dd) return {Poly(), Poly(rem)};
  RatVec quo(rem.size() - dd, Rat(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    Rat q = rem[k] / lead;
    quo[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = c_[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rat a = c.abs();
    bool unit_coeff = a.is_one() && k > 0;
    if (!unit_coeff) os << a.str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hecurve
