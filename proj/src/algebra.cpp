#include "hecurve/algebra.hpp"

#include <algorithm>

#include "hecurve/quaternion.hpp"

namespace hecurve {

namespace {

RatVec basis_vec(int dim, int i) {
  RatVec v(dim, Rat(0));
  v[i] = Rat(1);
  return v;
}

}  // namespace

SparseVec SparseVec::unit(int i, Rat c) {
  SparseVec v;
  if (!c.is_zero()) v.t.emplace_back(i, std::move(c));
  return v;
}

SparseVec SparseVec::from_dense(const RatVec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.t.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

RatVec SparseVec::dense(int dim) const {
  RatVec v(dim, Rat(0));
  for (const auto& [i, c] : t) v[i] = c;
  return v;
}

void SparseVec::add_scaled(const SparseVec& o, const Rat& c) {
  if (c.is_zero() || o.t.empty()) return;
  std::vector<std::pair<int, Rat>> out;
  out.reserve(t.size() + o.t.size());
  size_t a = 0, b = 0;
  while (a < t.size() || b < o.t.size()) {
    if (b == o.t.size() || (a < t.size() && t[a].first < o.t[b].first)) {
      out.push_back(t[a++]);
    } else if (a == t.size() || t[a].first > o.t[b].first) {
      Rat v = c * o.t[b].second;
      if (!v.is_zero()) out.emplace_back(o.t[b].first, std::move(v));
      ++b;
    } else {
      Rat v = t[a].second + c * o.t[b].second;
      if (!v.is_zero()) out.emplace_back(t[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  t = std::move(out);
}

SparseVec SparseVec::scaled(const Rat& c) const {
  SparseVec out;
  if (c.is_zero()) return out;
  out.t.reserve(t.size());
  for (const auto& [i, v] : t) out.t.emplace_back(i, c * v);
  return out;
}

Algebra::Algebra(std::vector<std::string> labels, std::vector<SparseVec> table, RatVec unit,
                 std::vector<RatVec> idempotents, std::vector<RatVec> generators)
    : dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)),
      generators_(std::move(generators)) {
  require(table_.size() == static_cast<size_t>(dim_) * dim_, Err::InvalidInput,
          "structure constant table has wrong shape");
  require(static_cast<int>(unit_.size()) == dim_, Err::InvalidInput, "unit vector has wrong size");
  for (const auto& e : idempotents_)
    require(static_cast<int>(e.size()) == dim_, Err::InvalidInput, "idempotent has wrong size");
  for (const auto& g : generators_)
    require(static_cast<int>(g.size()) == dim_, Err::InvalidInput, "generator has wrong size");
}

const std::vector<RatVec>& Algebra::generators() const {
  if (!generators_.empty()) return generators_;
  if (basis_gens_.empty()) {
    for (int i = 0; i < dim_; ++i) basis_gens_.push_back(basis_vec(dim_, i));
  }
  return basis_gens_;
}

RatVec Algebra::mul(const RatVec& x, const RatVec& y) const {
  RatVec out(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Rat c = x[i] * y[j];
      for (const auto& [k, v] : prod(i, j).t) out[k] += c * v;
    }
  }
  return out;
}

RatVec Algebra::mul_basis_left(int b, const RatVec& y) const {
  RatVec out(dim_, Rat(0));
  for (int j = 0; j < dim_; ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& [k, v] : prod(b, j).t) out[k] += y[j] * v;
  }
  return out;
}

RatVec Algebra::mul_basis_right(const RatVec& x, int b) const {
  RatVec out(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [k, v] : prod(i, b).t) out[k] += x[i] * v;
  }
  return out;
}

Mat Algebra::left_mult(const RatVec& x) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, v] : prod(i, j).t) m.at(k, j) += x[i] * v;
    }
  }
  return m;
}

Mat Algebra::right_mult(const RatVec& x) const {
  Mat m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [k, v] : prod(i, j).t) m.at(k, i) += x[j] * v;
    }
  }
  return m;
}

Rat Algebra::basis_trace(int i) const {
  if (trace_cache_.empty()) {
    trace_cache_.assign(dim_, Rat(0));
    for (int b = 0; b < dim_; ++b) {
      Rat t(0);
      for (int j = 0; j < dim_; ++j) {
        for (const auto& [k, v] : prod(b, j).t)
          if (k == j) t += v;
      }
      trace_cache_[b] = t;
    }
  }
  return trace_cache_[i];
}

Mat Algebra::trace_gram() const {
  Mat g(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Rat t(0);
      for (const auto& [k, v] : prod(i, j).t) t += v * basis_trace(k);
      g.at(i, j) = t;
    }
  }
  return g;
}

Algebra::Validation Algebra::validate(CornerRule corner, int assoc_dim_cap) const {
  Validation out;
  auto flag = [&](const std::string& msg) {
    out.ok = false;
    out.failures.push_back(msg);
  };

  for (int b = 0; b < dim_; ++b) {
    RatVec e = basis_vec(dim_, b);
    if (mul(unit_, e) != e || mul(e, unit_) != e) {
      flag("unit fails on basis element " + std::to_string(b));
      break;
    }
  }

  RatVec sum(dim_, Rat(0));
  for (size_t i = 0; i < idempotents_.size(); ++i) {
    sum = vec_add(sum, idempotents_[i]);
    for (size_t j = 0; j < idempotents_.size(); ++j) {
      RatVec p = mul(idempotents_[i], idempotents_[j]);
      RatVec expect = (i == j) ? idempotents_[i] : RatVec(dim_, Rat(0));
      if (p != expect)
        flag("idempotents " + std::to_string(i) + "," + std::to_string(j) +
             " not orthogonal/idempotent");
    }
  }
  if (!idempotents_.empty() && sum != unit_) flag("idempotents do not sum to the unit");

  if (dim_ <= assoc_dim_cap) {
    out.assoc_checked = true;
    for (int i = 0; i < dim_ && out.ok; ++i) {
      for (int j = 0; j < dim_ && out.ok; ++j) {
        const SparseVec& ij = prod(i, j);
        for (int k = 0; k < dim_; ++k) {
          SparseVec lhs;
          for (const auto& [m, c] : ij.t) lhs.add_scaled(prod(m, k), c);
          SparseVec rhs;
          for (const auto& [m, c] : prod(j, k).t) rhs.add_scaled(prod(i, m), c);
          if (lhs.t != rhs.t) {
            flag("associativity fails at triple (" + std::to_string(i) + "," + std::to_string(j) +
                 "," + std::to_string(k) + ")");
            break;
          }
        }
      }
    }
  }

  if (corner != CornerRule::Skip && out.ok) {
    for (size_t i = 0; i < idempotents_.size(); ++i) {
      Subspace cs(dim_);
      const RatVec& e = idempotents_[i];
      for (int b = 0; b < dim_; ++b) cs.insert(mul(mul(e, basis_vec(dim_, b)), e));
      Algebra ca = subspace_algebra(*this, cs, e, "c");
      auto rad = mat_kernel(ca.trace_gram());
      Algebra q = quotient_algebra(ca, rad);
      bool pass = false;
      if (corner == CornerRule::Division) {
        pass = division_algebra_check(q);
      } else {
        auto cb = center_basis(q);
        Subspace zs(q.dim());
        for (auto& v : cb) zs.insert(v);
        Algebra z = subspace_algebra(q, zs, q.unit(), "z");
        pass = small_field_check(z);
      }
      if (!pass) flag("corner " + std::to_string(i) + " fails the primitivity witness");
    }
  }

  return out;
}

Module::Module(int dim, int algebra_dim) : dim_(dim), act_(algebra_dim) {
  for (auto& cols : act_) cols.assign(dim_, SparseVec{});
}

Module Module::from_dense_actions(const std::vector<Mat>& actions) {
  require(!actions.empty(), Err::InvalidInput, "module needs at least one action matrix");
  int m = actions[0].rows();
  Module mod(m, static_cast<int>(actions.size()));
  for (size_t b = 0; b < actions.size(); ++b) {
    require(actions[b].rows() == m && actions[b].cols() == m, Err::InvalidInput,
            "module action matrices must be square of equal size");
    for (int col = 0; col < m; ++col)
      mod.act_[b][col] = SparseVec::from_dense(actions[b].col(col));
  }
  return mod;
}

void Module::set_action_col(int b, int col, SparseVec v) { act_[b][col] = std::move(v); }

Mat Module::action_dense(int b) const {
  Mat m(dim_, dim_);
  for (int col = 0; col < dim_; ++col)
    for (const auto& [i, c] : act_[b][col].t) m.at(i, col) = c;
  return m;
}

Mat Module::action_of(const RatVec& x) const {
  Mat m(dim_, dim_);
  for (size_t b = 0; b < act_.size(); ++b) {
    if (x[b].is_zero()) continue;
    for (int col = 0; col < dim_; ++col)
      for (const auto& [i, c] : act_[b][col].t) m.at(i, col) += x[b] * c;
  }
  return m;
}

RatVec Module::act_basis(int b, const RatVec& v) const {
  RatVec out(dim_, Rat(0));
  for (int col = 0; col < dim_; ++col) {
    if (v[col].is_zero()) continue;
    for (const auto& [i, c] : act_[b][col].t) out[i] += v[col] * c;
  }
  return out;
}

RatVec Module::act(const RatVec& x, const RatVec& v) const {
  RatVec out(dim_, Rat(0));
  for (size_t b = 0; b < act_.size(); ++b) {
    if (x[b].is_zero()) continue;
    RatVec part = act_basis(static_cast<int>(b), v);
    for (int i = 0; i < dim_; ++i) out[i] += x[b] * part[i];
  }
  return out;
}

bool Module::respects(const Algebra& A, int pair_dim_cap) const {
  int d = A.dim();
  for (int col = 0; col < dim_; ++col) {
    RatVec v(dim_, Rat(0));
    v[col] = Rat(1);
    if (act(A.unit(), v) != v) return false;
  }
  if (d > pair_dim_cap) return true;
  std::vector<Mat> dense;
  dense.reserve(d);
  for (int b = 0; b < d; ++b) dense.push_back(action_dense(b));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Mat lhs = dense[i] * dense[j];
      Mat rhs(dim_, dim_);
      for (const auto& [k, c] : A.prod(i, j).t) rhs = rhs + dense[k].scaled(c);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

RatVec Subspace::coords(const RatVec& v) const {
  RatVec c(span_.dim(), Rat(0));
  RatVec rem = v;
  const auto& rows = span_.rows();
  const auto& piv = span_.pivots();
  for (int r = 0; r < span_.dim(); ++r) {
    c[r] = rem[piv[r]];
    if (c[r].is_zero()) continue;
    for (size_t j = 0; j < rem.size(); ++j) rem[j] -= c[r] * rows[r][j];
  }
  require(vec_is_zero(rem), Err::InvalidInput, "vector not inside subspace");
  return c;
}

Algebra subspace_algebra(const Algebra& A, const Subspace& S, const RatVec& unit_in_A,
                         const std::string& label_prefix) {
  int n = S.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(label_prefix + std::to_string(i));
  std::vector<SparseVec> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RatVec p = A.mul(S.basis()[i], S.basis()[j]);
      table[static_cast<size_t>(i) * n + j] = SparseVec::from_dense(S.coords(p));
    }
  }
  RatVec unit = S.coords(unit_in_A);
  return Algebra(std::move(labels), std::move(table), unit, {unit});
}

Algebra quotient_algebra(const Algebra& A, const std::vector<RatVec>& ideal) {
  int d = A.dim();
  RowSpan span;
  for (const auto& v : ideal) span.insert(v);
  std::vector<bool> is_pivot(d, false);
  for (int p : span.pivots()) is_pivot[p] = true;
  std::vector<int> free_coords;
  for (int j = 0; j < d; ++j)
    if (!is_pivot[j]) free_coords.push_back(j);
  int q = static_cast<int>(free_coords.size());

  auto project = [&](const RatVec& v) {
    RatVec red = span.reduce(v);
    RatVec out(q, Rat(0));
    for (int t = 0; t < q; ++t) out[t] = red[free_coords[t]];
    return out;
  };

  std::vector<std::string> labels;
  for (int t = 0; t < q; ++t) labels.push_back("q" + std::to_string(t));
  std::vector<SparseVec> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<size_t>(i) * q + j] = SparseVec::from_dense(
          project(A.mul(basis_vec(d, free_coords[i]), basis_vec(d, free_coords[j]))));
  RatVec unit = project(A.unit());
  std::vector<RatVec> idems;
  for (const auto& e : A.idempotents()) {
    RatVec pe = project(e);
    if (!vec_is_zero(pe)) idems.push_back(pe);
  }
  if (idems.empty()) idems.push_back(unit);
  return Algebra(std::move(labels), std::move(table), std::move(unit), std::move(idems));
}

std::vector<RatVec> center_basis(const Algebra& A) {
  int d = A.dim();
  std::vector<RatVec> rows;
  for (const auto& g : A.generators()) {
    Mat c = A.left_mult(g) - A.right_mult(g);
    for (int i = 0; i < d; ++i) {
      RatVec row = c.row(i);
      if (!vec_is_zero(row)) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    std::vector<RatVec> all;
    for (int i = 0; i < d; ++i) all.push_back(basis_vec(d, i));
    return all;
  }
  return mat_kernel(Mat::from_rows(rows, d));
}

Algebra matrix_algebra(const Algebra& A, int n) {
  int da = A.dim();
  int d = n * n * da;
  auto id = [&](int u, int v, int a) { return (u * n + v) * da + a; };
  std::vector<std::string> labels(d);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int a = 0; a < da; ++a)
        labels[id(u, v, a)] = "E" + std::to_string(u) + std::to_string(v) + "*" + A.labels()[a];
  std::vector<SparseVec> table(static_cast<size_t>(d) * d);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int a = 0; a < da; ++a)
        for (int x = 0; x < n; ++x)
          for (int b = 0; b < da; ++b) {
            SparseVec out;
            for (const auto& [k, c] : A.prod(a, b).t) out.t.emplace_back(id(u, x, k), c);
            table[static_cast<size_t>(id(u, v, a)) * d + id(v, x, b)] = std::move(out);
          }
  RatVec unit(d, Rat(0));
  std::vector<RatVec> idems;
  for (int u = 0; u < n; ++u) {
    RatVec e(d, Rat(0));
    for (int a = 0; a < da; ++a) {
      if (!A.unit()[a].is_zero()) {
        e[id(u, u, a)] = A.unit()[a];
        unit[id(u, u, a)] = A.unit()[a];
      }
    }
    idems.push_back(std::move(e));
  }
  return Algebra(std::move(labels), std::move(table), std::move(unit), std::move(idems));
}

bool division_algebra_check(const Algebra& A) {
  int d = A.dim();
  if (d == 0) return false;
  if (mat_rank(A.trace_gram()) != d) return false;

  auto cb = center_basis(A);
  int zdim = static_cast<int>(cb.size());

  if (d == 1) return !A.unit()[0].is_zero();

  if (d == 2) {
    if (zdim != 2) return false;
    Subspace zs(d);
    for (auto& v : cb) zs.insert(v);
    return small_field_check(subspace_algebra(A, zs, A.unit(), "z"));
  }

  if (d == 4 && zdim == 1) {
    // Quaternion shape: reduced trace t(x) = tr(L_x)/2, conjugate t(x)-x,
    // reduced norm n(x) = x(t(x)-x). Parameters come from an orthogonal
    // trace-zero pair; the Hilbert-symbol test decides division.
    auto rtrace = [&](const RatVec& x) {
      Rat t(0);
      for (int i = 0; i < d; ++i)
        if (!x[i].is_zero()) t += x[i] * A.basis_trace(i);
      return t / Rat(2);
    };
    auto nscalar = [&](const RatVec& x) -> std::optional<Rat> {
      RatVec bar = vec_sub(vec_scale(rtrace(x), A.unit()), x);
      RatVec prod = A.mul(x, bar);
      Mat m(d, 1);
      for (int i = 0; i < d; ++i) m.at(i, 0) = A.unit()[i];
      auto sol = mat_solve(m, prod);
      if (!sol) return std::nullopt;
      return (*sol)[0];
    };
    Mat trow(1, d);
    for (int i = 0; i < d; ++i) trow.at(0, i) = A.basis_trace(i);
    auto pure = mat_kernel(trow);
    if (pure.size() != 3) return false;
    std::vector<RatVec> candidates = pure;
    for (size_t i = 0; i < pure.size(); ++i)
      for (size_t j = i + 1; j < pure.size(); ++j) candidates.push_back(vec_add(pure[i], pure[j]));
    RatVec e1;
    Rat n1;
    bool found = false;
    for (auto& c : candidates) {
      auto nc = nscalar(c);
      if (nc && !nc->is_zero()) {
        e1 = c;
        n1 = *nc;
        found = true;
        break;
      }
    }
    if (!found) return false;
    auto bform = [&](const RatVec& x, const RatVec& y) -> std::optional<Rat> {
      auto nxy = nscalar(vec_add(x, y));
      auto nx = nscalar(x);
      auto ny = nscalar(y);
      if (!nxy || !nx || !ny) return std::nullopt;
      return (*nxy - *nx - *ny) / Rat(2);
    };
    for (auto& c : candidates) {
      auto b1 = bform(c, e1);
      if (!b1) return false;
      RatVec ortho = vec_sub(c, vec_scale(*b1 / n1, e1));
      if (vec_is_zero(ortho)) continue;
      RowSpan s;
      s.insert(e1);
      if (!s.insert(ortho)) continue;
      auto nc = nscalar(ortho);
      if (!nc) return false;
      if (nc->is_zero()) return false;
      return quaternion_is_division(-n1, -*nc);
    }
    return false;
  }

  fail(Err::CheckFailed, "division check unsupported for dim " + std::to_string(d) +
                             " with center dim " + std::to_string(zdim));
}

bool small_field_check(const Algebra& A) {
  int d = A.dim();
  if (d == 1) return !A.unit()[0].is_zero();
  if (d != 2) fail(Err::CheckFailed, "field check only for dim <= 2");
  RowSpan s;
  s.insert(A.unit());
  RatVec x;
  for (int i = 0; i < d; ++i) {
    RatVec v = basis_vec(d, i);
    RowSpan copy = s;
    if (copy.insert(v)) {
      x = v;
      break;
    }
  }
  require(!x.empty(), Err::CheckFailed, "degenerate 2-dimensional algebra");
  RatVec x2 = A.mul(x, x);
  Mat m(d, 2);
  for (int i = 0; i < d; ++i) {
    m.at(i, 0) = x[i];
    m.at(i, 1) = A.unit()[i];
  }
  auto sol = mat_solve(m, x2);
  if (!sol) return false;
  // x^2 = p x + q: the minimal polynomial t^2 - p t - q is irreducible
  // exactly when p^2 + 4q is not a rational square.
  Rat disc = (*sol)[0] * (*sol)[0] + Rat(4) * (*sol)[1];
  if (disc.is_zero()) return false;
  if (disc.sign() < 0) return true;
  mpz_class n = disc.num(), dd = disc.den();
  return !(mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(dd.get_mpz_t()));
}

}  // namespace hecurve
