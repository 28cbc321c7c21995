#pragma once

#include <string>
#include <vector>

#include "hecurve/algebra.hpp"
#include "hecurve/cyclotomic.hpp"

namespace hecurve {

struct Quiver {
  struct Arrow {
    int src;
    int dst;
    std::string label;
  };
  int vertices = 0;
  std::vector<Arrow> arrows;
};

/// A path, arrows listed first-applied first; empty = lazy path at `vertex`.
struct QPath {
  int vertex = -1;  // source vertex (meaningful when arrows is empty too)
  std::vector<int> arrows;
};

/// Linear combination of parallel paths with cyclotomic coefficients.
struct Relation {
  std::vector<std::pair<QPath, Cyc>> terms;
};

struct QuiverAlgebraSpec {
  Quiver quiver;
  std::vector<Relation> relations;
  int conductor = 1;
  int length_bound = 0;  // 0 = automatic
};

struct QuiverBasis {
  long dim_over_field = 0;
  int max_basis_length = 0;
  long paths_enumerated = 0;
};

/// Basis of the quotient path algebra by exact elimination per
/// (source, target) block. Errors NotFiniteDimensional when the basis fails
/// to stabilize within the length bound.
QuiverBasis enumerate_basis(const QuiverAlgebraSpec& spec);

/// Quotient path algebra as a Q-presentation (restriction of scalars from
/// Q(zeta_conductor)); vertex idempotents become the distinguished list.
Algebra to_algebra(const QuiverAlgebraSpec& spec);

/// A point of the projective line over the coefficient field.
struct ProjPoint {
  Cyc alpha;
  Cyc beta;
};

/// Canonical algebra presentation: source, sink, t weighted arms, the two
/// parallel arrows u, v, and one arm relation per point.
QuiverAlgebraSpec canonical_quiver(const std::vector<ProjPoint>& points,
                                   const std::vector<int>& weights, int conductor);

/// Squid presentation: Kronecker head, t arms hanging off the sink, relations
/// c_i (beta_i u - alpha_i v) = 0.
QuiverAlgebraSpec squid_quiver(const std::vector<ProjPoint>& points,
                               const std::vector<int>& weights, int conductor);

enum class EuclideanType { ATilde, DTilde, E6Tilde, E7Tilde, E8Tilde };

/// Extended Dynkin quiver with a fixed orientation (arrows toward the branch
/// vertex; `reversed` ships the opposite orientation for cross-checks).
/// For ATilde, p and q are the two chain lengths around the cycle.
QuiverAlgebraSpec euclidean_quiver(EuclideanType type, int p = 0, int q = 0,
                                   bool reversed = false);
EuclideanType parse_euclidean(const std::string& name);

/// Cyclic quiver on n vertices with every path of length kill_len set to zero.
QuiverAlgebraSpec cyclic_truncated(int n, int kill_len, int conductor);

}  // namespace hecurve
