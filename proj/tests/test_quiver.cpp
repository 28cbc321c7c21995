#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecurve/findim.hpp"
#include "hecurve/quiver.hpp"

using namespace hecurve;

namespace {

QuiverAlgebraSpec a2_spec() {
  QuiverAlgebraSpec s;
  s.quiver.vertices = 2;
  s.quiver.arrows.push_back({0, 1, "a"});
  return s;
}

QuiverAlgebraSpec kronecker_spec() {
  QuiverAlgebraSpec s;
  s.quiver.vertices = 2;
  s.quiver.arrows.push_back({0, 1, "u"});
  s.quiver.arrows.push_back({0, 1, "v"});
  return s;
}

std::vector<ProjPoint> std_points(int t, const Rat& lambda = Rat(2)) {
  std::vector<ProjPoint> pts;
  if (t >= 1) pts.push_back({Cyc(Rat(1)), Cyc(Rat(0))});
  if (t >= 2) pts.push_back({Cyc(Rat(0)), Cyc(Rat(1))});
  if (t >= 3) pts.push_back({Cyc(Rat(1)), Cyc(Rat(1))});
  if (t >= 4) pts.push_back({Cyc(lambda), Cyc(Rat(1))});
  return pts;
}

}  // namespace

TEST_CASE("basis of relation-free quivers counts paths") {
  CHECK(enumerate_basis(a2_spec()).dim_over_field == 3);
  CHECK(enumerate_basis(kronecker_spec()).dim_over_field == 4);

  QuiverAlgebraSpec one;
  one.quiver.vertices = 1;
  Algebra A = to_algebra(one);
  CHECK(A.dim() == 1);
  CHECK(A.validate().ok);
}

TEST_CASE("A2 quiver algebra has the expected cartan matrix") {
  Algebra A = to_algebra(a2_spec());
  CHECK(A.dim() == 3);
  CHECK(A.validate().ok);
  AlgebraAnalysis an(A);
  CHECK(an.cartan_matrix() == Mat::from_long({{1, 0}, {1, 1}}));
}

TEST_CASE("kronecker via quiver machinery") {
  Algebra A = to_algebra(kronecker_spec());
  CHECK(A.dim() == 4);
  AlgebraAnalysis an(A);
  CHECK(an.coxeter_polynomial().str() == "t^2 - 2t + 1");
  CHECK(an.symmetrized_corank() == 1);
}

TEST_CASE("basis enumeration is independent of arrow insertion order") {
  QuiverAlgebraSpec s1 = kronecker_spec();
  QuiverAlgebraSpec s2;
  s2.quiver.vertices = 2;
  s2.quiver.arrows.push_back({0, 1, "v"});
  s2.quiver.arrows.push_back({0, 1, "u"});
  Algebra A1 = to_algebra(s1);
  Algebra A2 = to_algebra(s2);
  CHECK(A1.labels() == A2.labels());
  CHECK(A1.table() == A2.table());
}

TEST_CASE("cyclic quiver with killed paths") {
  // All paths of length N are zero: dimension n*N.
  for (int n : {2, 3}) {
    for (int N : {2, 3}) {
      QuiverAlgebraSpec s = cyclic_truncated(n, N, 1);
      auto b = enumerate_basis(s);
      CHECK(b.dim_over_field == n * N);
      Algebra A = to_algebra(s);
      CHECK(A.dim() == n * N);
      CHECK(A.validate(Algebra::CornerRule::Skip).ok);
    }
  }
  // C3 with length-2N paths killed, N = 2: dim 3 * 4.
  QuiverAlgebraSpec s = cyclic_truncated(3, 4, 1);
  CHECK(enumerate_basis(s).dim_over_field == 12);
}

TEST_CASE("canonical algebra shapes") {
  // weights (2,3,6): 2 + (1+2+5) = 10 vertices.
  auto spec = canonical_quiver(std_points(3), {2, 3, 6}, 1);
  CHECK(spec.quiver.vertices == 10);
  // weights (2,2,2,2): the tubular quiver with 6 vertices, dim 16.
  auto tub = canonical_quiver(std_points(4), {2, 2, 2, 2}, 1);
  CHECK(tub.quiver.vertices == 6);
  Algebra A = to_algebra(tub);
  CHECK(A.dim() == 16);
  CHECK(A.validate().ok);
}

TEST_CASE("duplicate points rejected") {
  std::vector<ProjPoint> pts = {{Cyc(Rat(1)), Cyc(Rat(0))}, {Cyc(Rat(2)), Cyc(Rat(0))}};
  CHECK_THROWS_AS(canonical_quiver(pts, {2, 2}, 1), Error);
  CHECK_THROWS_AS(squid_quiver(pts, {2, 2}, 1), Error);
}

TEST_CASE("squid shapes") {
  auto s = squid_quiver(std_points(3), {2, 3, 6}, 1);
  CHECK(s.quiver.vertices == 10);
  // weight 1 arm contributes nothing: plain Kronecker.
  auto k = squid_quiver(std_points(1), {1}, 1);
  CHECK(k.quiver.vertices == 2);
  Algebra K = to_algebra(k);
  CHECK(K.dim() == 4);

  auto tub = squid_quiver(std_points(4), {2, 2, 2, 2}, 1);
  Algebra A = to_algebra(tub);
  CHECK(A.dim() == 16);
  CHECK(A.validate().ok);
}

TEST_CASE("squid and canonical share coxeter data on the tubular type") {
  Algebra sq = to_algebra(squid_quiver(std_points(4), {2, 2, 2, 2}, 1));
  Algebra ca = to_algebra(canonical_quiver(std_points(4), {2, 2, 2, 2}, 1));
  AlgebraAnalysis a1(sq), a2(ca);
  CHECK(a1.coxeter_polynomial() == a2.coxeter_polynomial());
  CHECK(a1.symmetrized_corank() == 2);
  CHECK(a2.symmetrized_corank() == 2);
  auto ord = a1.coxeter_order(24);
  REQUIRE(ord.has_value());
  CHECK(a2.coxeter_order(24) == ord);
}

TEST_CASE("euclidean quivers") {
  auto e6 = euclidean_quiver(EuclideanType::E6Tilde);
  CHECK(e6.quiver.vertices == 7);
  auto d4 = euclidean_quiver(EuclideanType::DTilde, 4);
  CHECK(d4.quiver.vertices == 5);
  auto e7 = euclidean_quiver(EuclideanType::E7Tilde);
  CHECK(e7.quiver.vertices == 8);
  auto e8 = euclidean_quiver(EuclideanType::E8Tilde);
  CHECK(e8.quiver.vertices == 9);
  auto a22 = euclidean_quiver(EuclideanType::ATilde, 2, 2);
  CHECK(a22.quiver.vertices == 4);

  // Coxeter polynomial is orientation independent for trees.
  for (auto ty : {EuclideanType::DTilde, EuclideanType::E6Tilde, EuclideanType::E7Tilde,
                  EuclideanType::E8Tilde}) {
    int p = (ty == EuclideanType::DTilde) ? 4 : 0;
    Algebra fwd = to_algebra(euclidean_quiver(ty, p, 0, false));
    Algebra rev = to_algebra(euclidean_quiver(ty, p, 0, true));
    CHECK(AlgebraAnalysis(fwd).coxeter_polynomial() ==
          AlgebraAnalysis(rev).coxeter_polynomial());
  }
}

TEST_CASE("euclidean match: squid of a dominant triple") {
  // (2,3,3) <-> E6tilde.
  Algebra sq = to_algebra(squid_quiver(std_points(3), {2, 3, 3}, 1));
  Algebra eu = to_algebra(euclidean_quiver(EuclideanType::E6Tilde));
  CHECK(AlgebraAnalysis(sq).coxeter_polynomial() == AlgebraAnalysis(eu).coxeter_polynomial());
}

TEST_CASE("cyclotomic coefficient quivers") {
  // Kronecker over the i-model: dimension doubles over Q.
  QuiverAlgebraSpec s = kronecker_spec();
  s.conductor = 4;
  Algebra A = to_algebra(s);
  CHECK(A.dim() == 8);
  CHECK(A.validate().ok);
  AlgebraAnalysis an(A);
  // Same Coxeter matrix as the rational Kronecker: the Euler form doubles
  // but the Coxeter matrix is unchanged.
  CHECK(an.euler_matrix() == Mat::from_long({{2, -4}, {0, 2}}));
  CHECK(an.coxeter_polynomial().str() == "t^2 - 2t + 1");
}

TEST_CASE("vertex idempotents complete and orthogonal in emitted algebras") {
  Algebra A = to_algebra(canonical_quiver(std_points(3), {2, 3, 4}, 1));
  CHECK(A.validate().ok);
  AlgebraAnalysis an(A);
  int total = 0;
  for (int i = 0; i < A.num_idempotents(); ++i) total += an.projective(i).dim();
  CHECK(total == A.dim());
}
