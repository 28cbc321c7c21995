#pragma once

#include <string>
#include <vector>

#include "hecurve/matrix.hpp"
#include "hecurve/rational.hpp"

namespace hecurve {

/// Sparse vector in basis coordinates: sorted indices, no zero entries.
struct SparseVec {
  std::vector<std::pair<int, Rat>> t;

  bool empty() const { return t.empty(); }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.t == b.t; }
  static SparseVec unit(int i, Rat c = Rat(1));
  static SparseVec from_dense(const RatVec& v);
  RatVec dense(int dim) const;
  void add_scaled(const SparseVec& o, const Rat& c);
  SparseVec scaled(const Rat& c) const;
};

/// Finite-dimensional pointed Q-algebra given by structure constants:
/// a distinguished basis, sparse products of basis pairs, the unit, and a
/// complete orthogonal idempotent list.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::vector<std::string> labels, std::vector<SparseVec> table, RatVec unit,
          std::vector<RatVec> idempotents, std::vector<RatVec> generators = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& prod(int i, int j) const { return table_[static_cast<size_t>(i) * dim_ + j]; }
  const std::vector<SparseVec>& table() const { return table_; }
  const RatVec& unit() const { return unit_; }
  const std::vector<RatVec>& idempotents() const { return idempotents_; }
  int num_idempotents() const { return static_cast<int>(idempotents_.size()); }
  /// Generating set as an algebra over Q (defaults to the full basis).
  const std::vector<RatVec>& generators() const;

  RatVec mul(const RatVec& x, const RatVec& y) const;
  RatVec mul_basis_left(int b, const RatVec& y) const;   // b_b * y
  RatVec mul_basis_right(const RatVec& x, int b) const;  // x * b_b
  Mat left_mult(const RatVec& x) const;
  Mat right_mult(const RatVec& x) const;

  Rat basis_trace(int i) const;  // tr of left multiplication by b_i
  Mat trace_gram() const;        // G[i][j] = tr(L_{b_i b_j})

  enum class CornerRule { Division, Simple, Skip };
  struct Validation {
    bool ok = true;
    bool assoc_checked = false;
    std::vector<std::string> failures;
  };
  /// Structural checks: unit, idempotent completeness/orthogonality,
  /// associativity on all basis triples (when dim <= assoc_dim_cap), and the
  /// primitivity witness on the idempotent corners.
  Validation validate(CornerRule corner = CornerRule::Division, int assoc_dim_cap = 140) const;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  RatVec unit_;
  std::vector<RatVec> idempotents_;
  std::vector<RatVec> generators_;
  mutable std::vector<RatVec> basis_gens_;
  mutable std::vector<Rat> trace_cache_;
};

/// Left module over a fixed Algebra, one (sparse-column) action matrix per
/// algebra basis element.
class Module {
 public:
  Module() = default;
  Module(int dim, int algebra_dim);
  static Module from_dense_actions(const std::vector<Mat>& actions);

  int dim() const { return dim_; }
  int algebra_dim() const { return static_cast<int>(act_.size()); }
  void set_action_col(int b, int col, SparseVec v);
  const std::vector<SparseVec>& action_cols(int b) const { return act_[b]; }
  Mat action_dense(int b) const;
  Mat action_of(const RatVec& algebra_elem) const;
  RatVec act_basis(int b, const RatVec& v) const;
  RatVec act(const RatVec& algebra_elem, const RatVec& v) const;

  /// Verifies compatibility with the structure constants and the unit
  /// (full pairwise check when algebra_dim <= cap, otherwise on generators).
  bool respects(const Algebra& A, int pair_dim_cap = 140) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<SparseVec>> act_;
};

/// Subspace of Q^n with coordinate bookkeeping (reduced echelon basis).
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  int ambient() const { return ambient_; }
  int dim() const { return span_.dim(); }
  bool insert(const RatVec& v) { return span_.insert(v); }
  bool contains(const RatVec& v) const { return span_.contains(v); }
  const std::vector<RatVec>& basis() const { return span_.rows(); }
  /// Coordinates of v in the echelon basis; errors if v is outside.
  RatVec coords(const RatVec& v) const;

 private:
  int ambient_;
  RowSpan span_;
};

/// Unital subalgebra spanned by a multiplicatively closed subspace.
Algebra subspace_algebra(const Algebra& A, const Subspace& S, const RatVec& unit_in_A,
                         const std::string& label_prefix);

/// Quotient by a two-sided ideal given as a spanning set.
Algebra quotient_algebra(const Algebra& A, const std::vector<RatVec>& ideal);

/// Basis of the center (elements commuting with the generator set).
std::vector<RatVec> center_basis(const Algebra& A);

/// n x n matrix algebra over A (basis = matrix unit x A-basis).
Algebra matrix_algebra(const Algebra& A, int n);

/// Division-algebra decision for the shipped residue shapes
/// (dim 1; dim 2 commutative; dim 4 with 1-dimensional center).
/// Errors CheckFailed on shapes outside that range.
bool division_algebra_check(const Algebra& A);

/// Whether a commutative unital algebra of dim <= 2 is a field.
bool small_field_check(const Algebra& A);

}  // namespace hecurve
