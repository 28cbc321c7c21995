#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecurve/cyclotomic.hpp"
#include "hecurve/matrix.hpp"
#include "hecurve/poly.hpp"
#include "hecurve/quaternion.hpp"
#include "hecurve/rational.hpp"

using namespace hecurve;

namespace {

Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return Rat(num(rng), den(rng));
}

Cyc rnd_cyc(int n, std::mt19937& rng) {
  RatVec c(Cyc::phi(n));
  for (auto& x : c) x = rnd_rat(rng);
  return Cyc(n, std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat::parse("7/3") == Rat(7, 3));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
  CHECK(Rat(5, 6).inv() == Rat(6, 5));
  CHECK_THROWS_AS(Rat(1, 0), Error);
  CHECK_THROWS_AS(Rat(1).operator/=(Rat(0)), Error);
}

TEST_CASE("cyclotomic polynomial table") {
  CHECK(Cyc::min_poly(1).str("x") == "x - 1");
  CHECK(Cyc::min_poly(2).str("x") == "x + 1");
  CHECK(Cyc::min_poly(3).str("x") == "x^2 + x + 1");
  CHECK(Cyc::min_poly(4).str("x") == "x^2 + 1");
  CHECK(Cyc::min_poly(6).str("x") == "x^2 - x + 1");
  CHECK(Cyc::min_poly(12).str("x") == "x^4 - x^2 + 1");
  CHECK(Cyc::phi(12) == 4);
  CHECK(Cyc::phi(8) == 4);
}

TEST_CASE("zeta4 squared is -1") {
  Cyc i = Cyc::zeta(4);
  CHECK(cyc_arith(i, i, CycOp::Mul) == Cyc(Rat(-1)).lift(4));
}

TEST_CASE("zeta3 satisfies its minimal polynomial") {
  Cyc z = Cyc::zeta(3);
  Cyc sum = z * z + z + Cyc(Rat(1)).lift(3);
  CHECK(sum.is_zero());
}

TEST_CASE("zeta6 equals -zeta3^2 and cubes to -1") {
  Cyc z6 = Cyc::zeta(6);
  Cyc z3 = Cyc::zeta(3);
  int m = common_conductor(6, 3);
  CHECK(z6.lift(m) == (-(z3 * z3)).lift(m));
  Cyc cube = z6 * z6 * z6;
  CHECK(cube == Cyc(Rat(-1)).lift(6));
}

TEST_CASE("conductor mismatch and zero inverse are rejected") {
  CHECK_THROWS_AS(cyc_arith(Cyc::zeta(3), Cyc::zeta(4), CycOp::Add), Error);
  CHECK_THROWS_AS(Cyc(Rat(0)).inv(), Error);
}

TEST_CASE("conjugation") {
  CHECK(Cyc::zeta(4).conj() == -Cyc::zeta(4));
  CHECK(Cyc(Rat(3, 2)).conj() == Cyc(Rat(3, 2)));
  Cyc z3 = Cyc::zeta(3);
  CHECK(z3.conj() == z3 * z3);
  CHECK(z3.conj() == z3.inv());
}

TEST_CASE("field axioms on random cyclotomic samples") {
  std::mt19937 rng(12345);
  for (int n : {1, 2, 3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyc a = rnd_cyc(n, rng), b = rnd_cyc(n, rng), c = rnd_cyc(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        Cyc one = Cyc(Rat(1)).lift(n);
        CHECK(a * a.inv() == one);
      }
      // Conjugation is a ring homomorphism and an involution.
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      CHECK(a.conj().conj() == a);
    }
  }
}

TEST_CASE("quaternion arithmetic and norm multiplicativity") {
  std::mt19937 rng(777);
  Rat a(-1), b(-1);
  auto rq = [&] {
    std::array<Rat, 4> c;
    for (auto& x : c) x = rnd_rat(rng);
    return Quat(a, b, c);
  };
  Quat i(a, b, {0, 1, 0, 0}), j(a, b, {0, 0, 1, 0}), k(a, b, {0, 0, 0, 1});
  CHECK(i * i == Quat::scalar(a, b, a));
  CHECK(j * j == Quat::scalar(a, b, b));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  for (int t = 0; t < 30; ++t) {
    Quat x = rq(), y = rq(), z = rq();
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!x.is_zero()) {
      CHECK(x * x.inv() == Quat::scalar(a, b, Rat(1)));
    }
  }
}

TEST_CASE("hilbert symbols and division detection") {
  CHECK(quaternion_is_division(Rat(-1), Rat(-1)));
  CHECK(quaternion_is_division(Rat(-1), Rat(-3)));
  CHECK(quaternion_is_division(Rat(2), Rat(3)));
  CHECK_FALSE(quaternion_is_division(Rat(1), Rat(1)));
  CHECK_FALSE(quaternion_is_division(Rat(-1), Rat(2)));  // norm form is isotropic
  CHECK_FALSE(quaternion_is_division(Rat(1), Rat(-7)));
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), 0) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), 2) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), 3) == 1);
}

TEST_CASE("matrix rank kernel solve") {
  Mat id3 = Mat::identity(3);
  CHECK(mat_rank(id3) == 3);

  Mat m = Mat::from_long({{1, 1}, {1, 1}});
  auto ker = mat_kernel(m);
  REQUIRE(ker.size() == 1);
  // span{(1,-1)}
  CHECK(ker[0][0] * Rat(-1) == ker[0][1]);
  CHECK(mat_rank(m) == 1);

  Mat sym = Mat::from_long({{2, -2}, {-2, 2}});
  CHECK(mat_rank(sym) == 1);  // Kronecker symmetrized Euler matrix: corank 1

  Mat a = Mat::from_long({{2, 1}, {1, 1}});
  auto x = mat_solve(a, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == RatVec{Rat(3), Rat(2)});

  auto none = mat_solve(Mat::from_long({{1, 1}, {1, 1}}), {Rat(0), Rat(1)});
  CHECK_FALSE(none.has_value());

  auto inv = mat_inverse(a);
  REQUIRE(inv.has_value());
  CHECK((*inv * a).is_identity());
}

TEST_CASE("mat_solve substitutes back exactly on random systems") {
  std::mt19937 rng(99);
  for (int t = 0; t < 25; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    Mat m(n, n + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 1; ++j) m.at(i, j) = rnd_rat(rng);
    RatVec rhs(n);
    for (auto& x : rhs) x = rnd_rat(rng);
    auto x = mat_solve(m, rhs);
    if (x) CHECK(m.apply(*x) == rhs);
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(Mat(2, 2)).str() == "t^2");
  CHECK(char_poly(Mat::identity(2)).str() == "t^2 - 2t + 1");
  Mat m = Mat::from_long({{3, -2}, {2, -1}});
  CHECK(char_poly(m).str() == "t^2 - 2t + 1");
  CHECK_THROWS_AS(char_poly(Mat(2, 3)), Error);
  // Cayley-Hamilton on a random 4x4.
  std::mt19937 rng(5);
  Mat r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = rnd_rat(rng);
  Poly p = char_poly(r);
  Mat acc(4, 4);
  Mat pw = Mat::identity(4);
  for (int k = 0; k <= p.degree(); ++k) {
    acc = acc + pw.scaled(p.coeff(k));
    pw = pw * r;
  }
  CHECK(acc.is_zero());
}

TEST_CASE("row span incremental echelon") {
  RowSpan span;
  CHECK(span.insert({Rat(1), Rat(2), Rat(3)}));
  CHECK(span.insert({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(span.insert({Rat(1), Rat(3), Rat(4)}));
  CHECK(span.dim() == 2);
  CHECK(span.contains({Rat(2), Rat(5), Rat(7)}));
  CHECK_FALSE(span.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("polynomial pretty printing") {
  Poly p(RatVec{Rat(1), Rat(-2), Rat(1)});
  CHECK(p.str() == "t^2 - 2t + 1");
  Poly q(RatVec{Rat(0), Rat(1, 2)});
  CHECK(q.str() == "1/2t");
  CHECK(Poly().str() == "0");
  CHECK(Poly(RatVec{Rat(1), Rat(1)}).str() == "t + 1");
}
