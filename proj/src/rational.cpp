#include "hecurve/rational.hpp"

namespace hecurve {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ConductorMismatch: return "ConductorMismatch";
    case Err::ConductorTooSmall: return "ConductorTooSmall";
    case Err::NotSquare: return "NotSquare";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ResolutionTooLong: return "ResolutionTooLong";
    case Err::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Err::SingularEulerMatrix: return "SingularEulerMatrix";
    case Err::NotFiniteDimensional: return "NotFiniteDimensional";
    case Err::DuplicatePoints: return "DuplicatePoints";
    case Err::UnknownType: return "UnknownType";
    case Err::ActionRelationViolation: return "ActionRelationViolation";
    case Err::NotIso: return "NotIso";
    case Err::CheckFailed: return "CheckFailed";
    case Err::NotTransitive: return "NotTransitive";
    case Err::PatternMismatch: return "PatternMismatch";
    case Err::PointNotOnCurve: return "PointNotOnCurve";
    case Err::RelationFails: return "RelationFails";
    case Err::CurveNotPreserved: return "CurveNotPreserved";
    case Err::Inconsistent: return "Inconsistent";
    case Err::UnknownKind: return "UnknownKind";
    case Err::EndNotDivision: return "EndNotDivision";
    case Err::WrongEndDimension: return "WrongEndDimension";
    case Err::UnsupportedResidue: return "UnsupportedResidue";
    case Err::NotDivision: return "NotDivision";
    case Err::UnknownGroup: return "UnknownGroup";
    case Err::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

Rat::Rat(long n, long d) {
  require(d != 0, Err::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  require(!s.empty(), Err::InvalidInput, "empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      mpq_class v(s);
      v.canonicalize();
      return Rat(v);
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    require(d != 0, Err::DivisionByZero, "rational literal with zero denominator");
    mpq_class v(n, d);
    v.canonicalize();
    return Rat(v);
  } catch (const std::invalid_argument&) {
    fail(Err::InvalidInput, "bad rational literal '" + s + "'");
  }
}

long Rat::to_long() const {
  require(is_integer(), Err::InvalidInput, "non-integral rational where integer expected");
  mpz_class n = num();
  require(n.fits_slong_p(), Err::InvalidInput, "integer out of range");
  return n.get_si();
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  require(!o.is_zero(), Err::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inv() const {
  require(!is_zero(), Err::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1) / v_);
}

bool vec_is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace hecurve
