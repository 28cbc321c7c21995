#include "hecurve/findim.hpp"

namespace hecurve {

namespace {

RatVec basis_vec(int dim, int i) {
  RatVec v(dim, Rat(0));
  v[i] = Rat(1);
  return v;
}

}  // namespace

long hom_dim(const Algebra& A, const Module& M, const Module& N) {
  return hom_dim_gens(A.generators(), M, N);
}

long hom_dim_gens(const std::vector<RatVec>& gens, const Module& M, const Module& N) {
  int nm = N.dim() * M.dim();
  if (nm == 0) return 0;
  std::vector<RatVec> rows;
  for (const auto& g : gens) {
    Mat am = M.action_of(g);
    Mat an = N.action_of(g);
    if (am.is_zero() && an.is_zero()) continue;
    for (int i = 0; i < N.dim(); ++i) {
      for (int j = 0; j < M.dim(); ++j) {
        RatVec row(nm, Rat(0));
        for (int p = 0; p < N.dim(); ++p)
          if (!an.at(i, p).is_zero()) row[p * M.dim() + j] += an.at(i, p);
        for (int q = 0; q < M.dim(); ++q)
          if (!am.at(q, j).is_zero()) row[i * M.dim() + q] -= am.at(q, j);
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return nm;
  return nm - mat_rank(Mat::from_rows(rows, nm));
}

std::vector<Mat> hom_basis(const Algebra& A, const Module& M, const Module& N) {
  int nm = N.dim() * M.dim();
  std::vector<RatVec> rows;
  for (const auto& g : A.generators()) {
    Mat am = M.action_of(g);
    Mat an = N.action_of(g);
    for (int i = 0; i < N.dim(); ++i) {
      for (int j = 0; j < M.dim(); ++j) {
        RatVec row(nm, Rat(0));
        for (int p = 0; p < N.dim(); ++p)
          if (!an.at(i, p).is_zero()) row[p * M.dim() + j] += an.at(i, p);
        for (int q = 0; q < M.dim(); ++q)
          if (!am.at(q, j).is_zero()) row[i * M.dim() + q] -= am.at(q, j);
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<RatVec> ker;
  if (rows.empty()) {
    for (int t = 0; t < nm; ++t) ker.push_back(basis_vec(nm, t));
  } else {
    ker = mat_kernel(Mat::from_rows(rows, nm));
  }
  std::vector<Mat> out;
  for (const auto& v : ker) {
    Mat f(N.dim(), M.dim());
    for (int p = 0; p < N.dim(); ++p)
      for (int q = 0; q < M.dim(); ++q) f.at(p, q) = v[p * M.dim() + q];
    out.push_back(std::move(f));
  }
  return out;
}

Algebra end_algebra_op(const Algebra& A, const Module& M) {
  auto basis = hom_basis(A, M, M);
  int n = static_cast<int>(basis.size());
  require(n > 0, Err::CheckFailed, "module has empty endomorphism algebra");
  int m = M.dim();
  Subspace flat(m * m);
  auto flatten = [&](const Mat& f) {
    RatVec v(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) v[static_cast<size_t>(i) * m + j] = f.at(i, j);
    return v;
  };
  for (const auto& f : basis) flat.insert(flatten(f));
  require(flat.dim() == n, Err::CheckFailed, "endomorphism basis degenerate");
  // coords() is relative to the echelonized basis; rebuild the matrix list
  // in that order so products decompose exactly.
  std::vector<Mat> ech;
  for (const auto& row : flat.basis()) {
    Mat f(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) f.at(i, j) = row[static_cast<size_t>(i) * m + j];
    ech.push_back(std::move(f));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat prod = ech[b] * ech[a];  // opposite composition
      table[static_cast<size_t>(a) * n + b] = SparseVec::from_dense(flat.coords(flatten(prod)));
    }
  RatVec unit = flat.coords(flatten(Mat::identity(m)));
  return Algebra(std::move(labels), std::move(table), unit, {unit});
}

std::vector<RatVec> radical_basis(const Algebra& A) {
  int d = A.dim();
  auto rad = mat_kernel(A.trace_gram());
  // Verify: two-sided ideal.
  RowSpan span;
  for (const auto& v : rad) span.insert(v);
  for (const auto& v : rad) {
    for (int b = 0; b < d; ++b) {
      require(span.contains(A.mul_basis_left(b, v)), Err::CheckFailed,
              "radical candidate is not a left ideal");
      require(span.contains(A.mul_basis_right(v, b)), Err::CheckFailed,
              "radical candidate is not a right ideal");
    }
  }
  // Verify nilpotency by iterating spans of products rad * rad^k.
  std::vector<RatVec> layer = rad;
  int iter = 0;
  while (!layer.empty()) {
    RowSpan next;
    for (const auto& x : rad)
      for (const auto& y : layer) {
        RatVec p = A.mul(x, y);
        if (!vec_is_zero(p)) next.insert(std::move(p));
      }
    layer.assign(next.rows().begin(), next.rows().end());
    ++iter;
    require(iter <= d + 1, Err::CheckFailed, "radical candidate is not nilpotent");
  }
  // Verify the quotient is semisimple (nondegenerate trace form).
  Algebra q = quotient_algebra(A, rad);
  require(mat_rank(q.trace_gram()) == q.dim(), Err::CheckFailed,
          "quotient by radical candidate is not semisimple");
  return rad;
}

Module regular_module(const Algebra& A) {
  Module m(A.dim(), A.dim());
  for (int b = 0; b < A.dim(); ++b)
    for (int col = 0; col < A.dim(); ++col) m.set_action_col(b, col, A.prod(b, col));
  return m;
}

SubmodulePair submodule(const Algebra& A, const Module& parent,
                        const std::vector<RatVec>& span_vectors) {
  Subspace space(parent.dim());
  for (const auto& v : span_vectors) space.insert(v);
  int m = space.dim();
  Module mod(m, A.dim());
  for (int b = 0; b < A.dim(); ++b) {
    for (int r = 0; r < m; ++r) {
      RatVec img = parent.act_basis(b, space.basis()[r]);
      mod.set_action_col(b, r, SparseVec::from_dense(space.coords(img)));
    }
  }
  return SubmodulePair{std::move(mod), std::move(space)};
}

Module quotient_module_free(const Module& parent, const std::vector<RatVec>& sub) {
  RowSpan span;
  for (const auto& v : sub) span.insert(v);
  std::vector<bool> is_pivot(parent.dim(), false);
  for (int p : span.pivots()) is_pivot[p] = true;
  std::vector<int> free_coords;
  for (int j = 0; j < parent.dim(); ++j)
    if (!is_pivot[j]) free_coords.push_back(j);
  int q = static_cast<int>(free_coords.size());
  Module mod(q, parent.algebra_dim());
  for (int b = 0; b < parent.algebra_dim(); ++b) {
    for (int t = 0; t < q; ++t) {
      RatVec img = parent.act_basis(b, basis_vec(parent.dim(), free_coords[t]));
      RatVec red = span.reduce(img);
      RatVec out(q, Rat(0));
      for (int s = 0; s < q; ++s) out[s] = red[free_coords[s]];
      mod.set_action_col(b, t, SparseVec::from_dense(out));
    }
  }
  return mod;
}

Module quotient_module(const Algebra& A, const Module& parent, const std::vector<RatVec>& sub) {
  require(parent.algebra_dim() == A.dim(), Err::InvalidInput,
          "module does not belong to this algebra");
  return quotient_module_free(parent, sub);
}

AlgebraAnalysis::AlgebraAnalysis(const Algebra& A)
    : A_(A),
      proj_(A.num_idempotents()),
      proj_space_(A.num_idempotents()),
      top_(A.num_idempotents()),
      end_dim_(A.num_idempotents()),
      resolutions_(A.num_idempotents()) {}

const std::vector<RatVec>& AlgebraAnalysis::radical() const {
  if (!rad_) rad_ = radical_basis(A_);
  return *rad_;
}

const Module& AlgebraAnalysis::projective(int i) const {
  require(i >= 0 && i < points(), Err::IndexOutOfRange, "projective index");
  if (!proj_[i]) {
    Module reg = regular_module(A_);
    std::vector<RatVec> span;
    for (int b = 0; b < A_.dim(); ++b)
      span.push_back(A_.mul(basis_vec(A_.dim(), b), A_.idempotents()[i]));
    SubmodulePair pair = submodule(A_, reg, span);
    proj_[i] = std::move(pair.mod);
    proj_space_[i] = std::move(pair.space);
  }
  return *proj_[i];
}

const Subspace& AlgebraAnalysis::projective_space(int i) const {
  projective(i);
  return *proj_space_[i];
}

const Module& AlgebraAnalysis::simple_top(int i) const {
  require(i >= 0 && i < points(), Err::IndexOutOfRange, "simple index");
  if (!top_[i]) {
    const Module& P = projective(i);
    std::vector<RatVec> radP;
    for (const auto& r : radical())
      for (int c = 0; c < P.dim(); ++c) radP.push_back(P.act(r, basis_vec(P.dim(), c)));
    top_[i] = quotient_module(A_, P, radP);
  }
  return *top_[i];
}

long AlgebraAnalysis::end_dim(int i) const {
  if (!end_dim_[i]) end_dim_[i] = hom_dim(A_, simple_top(i), simple_top(i));
  return *end_dim_[i];
}

AlgebraAnalysis::CoverResult AlgebraAnalysis::projective_cover_step(const Module& M) const {
  int s = points();
  CoverResult out;
  out.mult.assign(s, 0);
  if (M.dim() == 0) {
    out.kernel_zero = true;
    return out;
  }
  // Top of M.
  std::vector<RatVec> radM;
  for (const auto& r : radical())
    for (int c = 0; c < M.dim(); ++c) radM.push_back(M.act(r, basis_vec(M.dim(), c)));
  RowSpan radspan;
  for (auto& v : radM)
    if (!vec_is_zero(v)) radspan.insert(v);

  // Generators: per idempotent, a D_i-basis of e_i * top(M), lifted to M.
  struct Gen {
    int idem;
    RatVec vec;  // element of M
  };
  std::vector<Gen> gens;
  for (int i = 0; i < s; ++i) {
    // Corner algebra basis (acting through A).
    Subspace cs(A_.dim());
    const RatVec& e = A_.idempotents()[i];
    for (int b = 0; b < A_.dim(); ++b) cs.insert(A_.mul(A_.mul(e, basis_vec(A_.dim(), b)), e));

    RowSpan covered = radspan;  // tracks rad M + D_i-span of chosen generators
    long count = 0;
    for (int c = 0; c < M.dim(); ++c) {
      RatVec v = M.act(e, basis_vec(M.dim(), c));
      if (vec_is_zero(v) || covered.contains(v)) continue;
      gens.push_back(Gen{i, v});
      ++count;
      for (const auto& cb : cs.basis()) covered.insert(M.act(cb, v));
      require(covered.contains(v), Err::NonIntegralMultiplicity,
              "generator not absorbed by its corner span");
    }
    // count generators give count * dim D_i fresh top dimensions; verified
    // below via the total dimension bookkeeping.
    out.mult[i] = count;
  }

  // Cover map P = sum Ae_i^{mult} -> M.
  std::vector<const Module*> blocks;
  std::vector<int> offsets;
  int pdim = 0;
  for (const auto& g : gens) {
    blocks.push_back(&projective(g.idem));
    offsets.push_back(pdim);
    pdim += projective(g.idem).dim();
  }
  Mat map(M.dim(), pdim);
  for (size_t t = 0; t < gens.size(); ++t) {
    const Module& P = *blocks[t];
    const Subspace& sp = projective_space(gens[t].idem);
    for (int c = 0; c < P.dim(); ++c) {
      RatVec img = M.act(sp.basis()[c], gens[t].vec);
      for (int r = 0; r < M.dim(); ++r) map.at(r, offsets[t] + c) = img[r];
    }
  }
  // Surjectivity check.
  require(mat_rank(map) == M.dim(), Err::CheckFailed, "projective cover not surjective");

  auto ker = mat_kernel(map);
  if (ker.empty()) {
    out.kernel_zero = true;
    out.kernel = Module(0, A_.dim());
    return out;
  }
  // P as a module: block diagonal of the projectives.
  Module P(pdim, A_.dim());
  for (int b = 0; b < A_.dim(); ++b) {
    for (size_t t = 0; t < gens.size(); ++t) {
      const Module& B = *blocks[t];
      for (int c = 0; c < B.dim(); ++c) {
        SparseVec shifted;
        for (const auto& [r, v] : B.action_cols(b)[c].t) shifted.t.emplace_back(offsets[t] + r, v);
        P.set_action_col(b, offsets[t] + c, std::move(shifted));
      }
    }
  }
  out.kernel = submodule(A_, P, ker).mod;
  return out;
}

std::vector<std::vector<long>> AlgebraAnalysis::min_proj_resolution(const Module& S,
                                                                    int max_len) const {
  require(max_len >= 1, Err::InvalidInput, "resolution length bound must be >= 1");
  require(S.algebra_dim() == A_.dim(), Err::InvalidInput,
          "module does not belong to this algebra");
  std::vector<std::vector<long>> steps;
  Module cur = S;
  for (int l = 0; ; ++l) {
    CoverResult st = projective_cover_step(cur);
    if (cur.dim() == 0) break;
    steps.push_back(st.mult);
    if (st.kernel_zero) break;
    require(l < max_len, Err::ResolutionTooLong,
            "kernel still nonzero after " + std::to_string(max_len) + " steps");
    cur = std::move(st.kernel);
  }
  return steps;
}

std::vector<long> AlgebraAnalysis::ext_dims(int i, int j, int max_len) const {
  require(i >= 0 && i < points() && j >= 0 && j < points(), Err::IndexOutOfRange, "ext indices");
  if (!resolutions_[i])
    resolutions_[i] = min_proj_resolution(simple_top(i), max_len);
  require(static_cast<int>(resolutions_[i]->size()) <= max_len + 1, Err::ResolutionTooLong,
          "cached resolution exceeds the requested length bound");
  const auto& res = *resolutions_[i];
  const Module& Sj = simple_top(j);
  std::vector<long> dims_ek(points());
  for (int k = 0; k < points(); ++k)
    dims_ek[k] = mat_rank(Sj.action_of(A_.idempotents()[k]));
  std::vector<long> out(max_len + 1, 0);
  for (size_t l = 0; l < res.size() && l <= static_cast<size_t>(max_len); ++l) {
    long d = 0;
    for (int k = 0; k < points(); ++k) d += res[l][k] * dims_ek[k];
    out[l] = d;
  }
  return out;
}

Mat AlgebraAnalysis::cartan_matrix() const {
  if (cartan_) return *cartan_;
  int s = points();
  Mat C(s, s);
  for (int i = 0; i < s; ++i) {
    long di = end_dim(i);
    for (int j = 0; j < s; ++j) {
      Subspace sp(A_.dim());
      const RatVec& ei = A_.idempotents()[i];
      const RatVec& ej = A_.idempotents()[j];
      for (int b = 0; b < A_.dim(); ++b)
        sp.insert(A_.mul(A_.mul(ei, basis_vec(A_.dim(), b)), ej));
      long dm = sp.dim();
      require(dm % di == 0, Err::NonIntegralMultiplicity,
              "corner bimodule dimension not divisible by End(S) dimension");
      C.at(i, j) = Rat(dm / di);
    }
  }
  cartan_ = C;
  return C;
}

Mat AlgebraAnalysis::euler_matrix() const {
  if (euler_) return *euler_;
  int s = points();
  Mat E(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      auto ext = ext_dims(i, j);
      Rat acc(0);
      Rat sign(1);
      for (size_t l = 0; l < ext.size(); ++l) {
        acc += sign * Rat(ext[l]);
        sign = -sign;
      }
      E.at(i, j) = acc;
    }
  euler_ = E;
  return E;
}

Mat AlgebraAnalysis::coxeter_matrix() const {
  Mat E = euler_matrix();
  auto inv = mat_inverse(E);
  require(inv.has_value(), Err::SingularEulerMatrix, "Euler matrix not invertible");
  return (*inv * E.transpose()).scaled(Rat(-1));
}

Poly AlgebraAnalysis::coxeter_polynomial() const { return char_poly(coxeter_matrix()); }

std::optional<long> AlgebraAnalysis::coxeter_order(long bound) const {
  Mat phi = coxeter_matrix();
  Mat pw = phi;
  for (long m = 1; m <= bound; ++m) {
    if (pw.is_identity()) return m;
    pw = pw * phi;
  }
  return std::nullopt;
}

long AlgebraAnalysis::symmetrized_corank() const {
  Mat E = euler_matrix();
  Mat S = E + E.transpose();
  return S.rows() - mat_rank(S);
}

std::optional<long> AlgebraAnalysis::coxeter_order_mod_radical(long bound) const {
  Mat E = euler_matrix();
  Mat S = E + E.transpose();
  auto K = mat_kernel(S);
  if (K.empty()) return coxeter_order(bound);
  Mat phi = coxeter_matrix();
  RowSpan span;
  for (const auto& v : K) span.insert(v);
  // The Coxeter matrix is an isometry of the Euler form; it must preserve
  // the radical of the symmetrized form.
  for (const auto& v : K)
    require(span.contains(phi.apply(v)), Err::CheckFailed,
            "Coxeter matrix does not preserve the form radical");
  std::vector<bool> is_pivot(S.cols(), false);
  for (int p : span.pivots()) is_pivot[p] = true;
  std::vector<int> free_coords;
  for (int j = 0; j < S.cols(); ++j)
    if (!is_pivot[j]) free_coords.push_back(j);
  int q = static_cast<int>(free_coords.size());
  Mat induced(q, q);
  for (int t = 0; t < q; ++t) {
    RatVec img = phi.apply(basis_vec(S.cols(), free_coords[t]));
    RatVec red = span.reduce(img);
    for (int s2 = 0; s2 < q; ++s2) induced.at(s2, t) = red[free_coords[s2]];
  }
  Mat pw = induced;
  for (long m = 1; m <= bound; ++m) {
    if (pw.is_identity()) return m;
    pw = pw * induced;
  }
  return std::nullopt;
}

InvariantReport AlgebraAnalysis::invariant_report(long coxeter_bound) const {
  InvariantReport r;
  r.cartan = cartan_matrix();
  r.euler = euler_matrix();
  r.coxeter_poly = coxeter_polynomial();
  r.coxeter_order = coxeter_order(coxeter_bound);
  r.symmetrized_corank = symmetrized_corank();
  return r;
}

}  // namespace hecurve
