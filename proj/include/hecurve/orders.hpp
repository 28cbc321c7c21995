#pragma once

#include <vector>

#include "hecurve/algebra.hpp"
#include "hecurve/cyclotomic.hpp"
#include "hecurve/matrix.hpp"

namespace hecurve {

/// F[z]/(z^N) for F = Q(zeta_conductor).
struct TruncatedDVR {
  int conductor = 1;
  int N = 2;
};

/// The standard block order over a truncated DVR: block (i, j) holds A for
/// i >= j and J = zA for i < j, with the i-th diagonal block of size
/// weights[i]. `staircase` truncates by total z-degree < N * n instead of
/// z^N = 0 per entry (the Morita-compatible truncation used by the skew
/// group comparisons).
struct StandardOrderSpec {
  TruncatedDVR base;
  std::vector<int> weights;
  bool staircase = false;
};

/// Basis bookkeeping for one standard order (positions, degrees, field
/// powers) plus the module and table constructions on top of it.
class OrderModel {
 public:
  explicit OrderModel(StandardOrderSpec spec);

  const StandardOrderSpec& spec() const { return spec_; }
  int n() const { return n_; }
  int r() const { return static_cast<int>(spec_.weights.size()); }
  int field_deg() const { return phi_; }
  long dim() const { return dim_; }
  int block_of(int row) const { return block_[row]; }
  int block_start(int i) const { return start_[i]; }

  int degree_lo(int u, int v) const { return block_[u] < block_[v] ? 1 : 0; }
  int degree_hi(int u, int v) const {
    int lo = degree_lo(u, v);
    return (spec_.staircase && lo == 1) ? spec_.base.N : spec_.base.N - 1;
  }
  /// Basis id of e_{uv} z^k zeta^e, or -1 when out of range.
  int basis_id(int u, int v, int k, int e) const;
  struct BasisKey {
    int u, v, k, e;
  };
  BasisKey key_of(int id) const { return keys_[id]; }

  const Algebra& algebra() const;  // built on first use
  /// Generating set (as dense coordinate vectors): minimal-degree matrix
  /// units, z*1, and zeta*1.
  const std::vector<RatVec>& generator_vectors() const;

  /// Simple module S_j (block column over the residue field).
  Module simple(int j) const;
  /// Indecomposable projective: the column module at block j.
  Module column_projective(int j) const;
  /// Basis ids of the radical pattern.
  std::vector<int> radical_pattern_ids() const;

  long semisimple_quotient_dim_expected() const;  // dim(D) * sum p_i^2

 private:
  void build_algebra() const;
  StandardOrderSpec spec_;
  int n_ = 0;
  int phi_ = 1;
  long dim_ = 0;
  std::vector<int> block_, start_;
  std::vector<int> pos_offset_;          // (u*n+v) -> first id (before field power)
  std::vector<BasisKey> keys_;
  mutable std::optional<Algebra> algebra_;
  mutable std::vector<RatVec> gens_;
};

struct OrderHomExtTable {
  Mat hom;   // dim_Q Hom(S_i, S_j)
  Mat ext1;  // dim_Q Ext^1(S_i, S_j)
};

/// Hom/Ext table computed from syzygies of the simples (with the
/// column-resolution route asserted to agree).
OrderHomExtTable hom_ext_table(const StandardOrderSpec& spec);

struct RadicalPatternReport {
  long rad_dim = 0;
  long quotient_dim = 0;
  bool ideal_ok = false;
  bool nilpotent_ok = false;
  bool quotient_semisimple = false;
  bool generic_checked = false;  // compared against the trace-form radical
  bool verified = false;
};
/// The displayed radical pattern, verified to be the Jacobson radical.
/// Errors PatternMismatch when any check fails. The trace-form cross-check
/// runs when dim <= generic_cap.
RadicalPatternReport radical_pattern(const StandardOrderSpec& spec, int generic_cap = 160);

struct SimpleResolutionReport {
  int j = 0;
  long source_dim = 0;   // dim Q_{j+1} (or Q_1 for j = r)
  long target_dim = 0;   // dim Q_j
  long image_dim = 0;
  long coker_dim = 0;
  long simple_dim = 0;
  bool linear_ok = false;
  bool image_in_radical = false;
  bool coker_is_simple = false;
};
/// The projective presentation of S_j: inclusion of column modules for
/// j < r, right multiplication by z for j = r; exactness by rank count.
SimpleResolutionReport simple_resolution(const StandardOrderSpec& spec, int j);

/// The cyclic shift i -> i+1 (mod r), validated against the duality
/// identity dim Hom(S_i, S_j) = dim Ext^1(S_j, S_{i+1}) on the tables.
std::vector<int> tau_on_simples(const StandardOrderSpec& spec);

struct MoritaProfile {
  int r = 0;
  long dim_d = 0;
  Mat hom, ext1;
  bool operator==(const MoritaProfile& o) const {
    return r == o.r && dim_d == o.dim_d && hom == o.hom && ext1 == o.ext1;
  }
};
MoritaProfile morita_profile(const StandardOrderSpec& spec);

}  // namespace hecurve
