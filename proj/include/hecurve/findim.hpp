#pragma once

#include <optional>

#include "hecurve/algebra.hpp"
#include "hecurve/poly.hpp"

namespace hecurve {

struct InvariantReport {
  Mat cartan;
  Mat euler;
  Poly coxeter_poly;
  std::optional<long> coxeter_order;
  long symmetrized_corank = 0;
};

/// dim_Q Hom_A(M, N).
long hom_dim(const Algebra& A, const Module& M, const Module& N);
/// Same, with the acting algebra given only through a generating set.
long hom_dim_gens(const std::vector<RatVec>& gens, const Module& M, const Module& N);
/// Basis of Hom_A(M, N) as matrices (rows: N coords, cols: M coords).
std::vector<Mat> hom_basis(const Algebra& A, const Module& M, const Module& N);
/// End_A(M)^op as an algebra presentation.
Algebra end_algebra_op(const Algebra& A, const Module& M);

/// Jacobson radical via the trace form of the regular representation
/// (characteristic zero), verified to be a nilpotent two-sided ideal with
/// semisimple quotient.
std::vector<RatVec> radical_basis(const Algebra& A);

Module regular_module(const Algebra& A);

/// Submodule of `parent` spanned by `span_vectors` (must be action-closed).
struct SubmodulePair {
  Module mod;
  Subspace space;  // basis rows in parent coordinates
};
SubmodulePair submodule(const Algebra& A, const Module& parent,
                        const std::vector<RatVec>& span_vectors);
/// Quotient of `parent` by the action-closed span `sub`.
Module quotient_module(const Algebra& A, const Module& parent, const std::vector<RatVec>& sub);
/// Quotient without an algebra object (the action list carries everything).
Module quotient_module_free(const Module& parent, const std::vector<RatVec>& sub);

/// Cached invariants of one pointed algebra.
class AlgebraAnalysis {
 public:
  explicit AlgebraAnalysis(const Algebra& A);
  const Algebra& algebra() const { return A_; }
  int points() const { return A_.num_idempotents(); }

  const std::vector<RatVec>& radical() const;
  const Module& projective(int i) const;
  /// Echelon basis of A e_i inside A (coordinates for the projective).
  const Subspace& projective_space(int i) const;
  const Module& simple_top(int i) const;
  /// dim_Q End_A(S_i).
  long end_dim(int i) const;

  /// Minimal projective resolution of S by iterated projective covers;
  /// returns per-step multiplicity vectors (one entry per idempotent).
  /// Errors ResolutionTooLong when the kernel survives past max_len steps.
  std::vector<std::vector<long>> min_proj_resolution(const Module& S, int max_len) const;

  /// dim_Q Ext^l(S_i, S_j) for l = 0..max_len.
  std::vector<long> ext_dims(int i, int j, int max_len = 4) const;

  Mat cartan_matrix() const;
  Mat euler_matrix() const;
  Mat coxeter_matrix() const;  // -E^{-1} E^T
  Poly coxeter_polynomial() const;
  std::optional<long> coxeter_order(long bound) const;
  long symmetrized_corank() const;
  /// Order of the map induced by the Coxeter matrix on K0 modulo the radical
  /// of the symmetrized Euler form.
  std::optional<long> coxeter_order_mod_radical(long bound) const;

  InvariantReport invariant_report(long coxeter_bound = 120) const;

 private:
  struct CoverResult {
    std::vector<long> mult;
    Module kernel;
    bool kernel_zero = false;
  };
  CoverResult projective_cover_step(const Module& M) const;

  const Algebra& A_;
  mutable std::optional<std::vector<RatVec>> rad_;
  mutable std::vector<std::optional<Module>> proj_;
  mutable std::vector<std::optional<Subspace>> proj_space_;
  mutable std::vector<std::optional<Module>> top_;
  mutable std::vector<std::optional<long>> end_dim_;
  mutable std::optional<Mat> cartan_, euler_;
  mutable std::vector<std::optional<std::vector<std::vector<long>>>> resolutions_;
};

}  // namespace hecurve
