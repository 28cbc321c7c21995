#include "hecurve/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hecurve {

namespace {

struct PathEntry {
  int src;
  int dst;
  std::vector<int> arrows;  // first applied first
};

struct BlockData {
  std::vector<int> path_ids;          // global ids, canonical order
  std::map<int, int> pos;             // global id -> block position
  SpanT<Cyc> ideal;                   // relation ideal restricted to the block
};

struct Enumeration {
  std::vector<PathEntry> paths;                  // global list, sorted by (len, lex)
  std::map<std::pair<int, std::vector<int>>, int> index;  // (src, arrows) -> id
  std::map<std::pair<int, int>, BlockData> blocks;
  int max_len = 0;
};

constexpr long kPathCap = 300000;

// Enumerate all paths of length <= bound (arrows pre-sorted by label).
Enumeration enumerate_paths(const Quiver& q, int bound) {
  Enumeration e;
  e.max_len = bound;
  std::vector<int> frontier;
  for (int v = 0; v < q.vertices; ++v) {
    PathEntry p{v, v, {}};
    int id = static_cast<int>(e.paths.size());
    e.index[{v, {}}] = id;
    e.paths.push_back(std::move(p));
    frontier.push_back(id);
  }
  for (int len = 1; len <= bound && !frontier.empty(); ++len) {
    std::vector<int> next;
    for (int pid : frontier) {
      PathEntry base = e.paths[pid];
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != base.dst) continue;
        PathEntry ext{base.src, q.arrows[a].dst, base.arrows};
        ext.arrows.push_back(static_cast<int>(a));
        int id = static_cast<int>(e.paths.size());
        require(id < kPathCap, Err::NotFiniteDimensional, "path explosion during enumeration");
        e.index[{ext.src, ext.arrows}] = id;
        e.paths.push_back(std::move(ext));
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  for (int id = 0; id < static_cast<int>(e.paths.size()); ++id) {
    const auto& p = e.paths[id];
    auto& blk = e.blocks[{p.src, p.dst}];
    blk.pos[id] = static_cast<int>(blk.path_ids.size());
    blk.path_ids.push_back(id);
  }
  return e;
}

bool quiver_is_acyclic(const Quiver& q, std::vector<int>* longest_out) {
  // Longest path per vertex via iterated relaxation; cycle -> not acyclic.
  std::vector<int> longest(q.vertices, 0);
  for (int iter = 0; iter <= q.vertices; ++iter) {
    bool changed = false;
    for (const auto& a : q.arrows) {
      if (longest[a.dst] < longest[a.src] + 1) {
        longest[a.dst] = longest[a.src] + 1;
        changed = true;
      }
    }
    if (!changed) {
      if (longest_out) *longest_out = longest;
      return true;
    }
  }
  return false;
}

struct Built {
  Enumeration e;
  std::vector<int> basis_ids;         // global ids of surviving paths
  std::map<int, int> basis_pos;       // global id -> basis index
  int conductor = 1;
  int stab_len = 0;
};

int relation_max_len(const std::vector<Relation>& rels) {
  size_t m = 0;
  for (const auto& r : rels)
    for (const auto& [p, c] : r.terms) m = std::max(m, p.arrows.size());
  return static_cast<int>(m);
}

Built build_quotient_basis(const QuiverAlgebraSpec& spec_in) {
  QuiverAlgebraSpec spec = spec_in;
  // Canonical arrow order (labels are unique).
  std::vector<int> perm(spec.quiver.arrows.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return spec.quiver.arrows[a].label < spec.quiver.arrows[b].label;
  });
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  {
    std::set<std::string> labels;
    for (const auto& a : spec.quiver.arrows) {
      require(labels.insert(a.label).second, Err::InvalidInput, "duplicate arrow label");
      require(a.src >= 0 && a.src < spec.quiver.vertices && a.dst >= 0 &&
                  a.dst < spec.quiver.vertices,
              Err::InvalidInput, "arrow endpoint out of range");
    }
  }
  Quiver sorted;
  sorted.vertices = spec.quiver.vertices;
  for (size_t i = 0; i < perm.size(); ++i) sorted.arrows.push_back(spec.quiver.arrows[perm[i]]);
  for (auto& rel : spec.relations)
    for (auto& [p, c] : rel.terms)
      for (auto& a : p.arrows) a = inv[a];

  int relmax = relation_max_len(spec.relations);
  std::vector<int> longest;
  bool acyclic = quiver_is_acyclic(sorted, &longest);
  int bound;
  if (acyclic) {
    bound = 0;
    for (int v : longest) bound = std::max(bound, v);
  } else {
    bound = spec.length_bound > 0 ? spec.length_bound : sorted.vertices + relmax + 4;
  }

  Built out;
  out.conductor = spec.conductor;
  out.e = enumerate_paths(sorted, bound);
  Enumeration& e = out.e;
  const Cyc zero = Cyc(Rat(0)).lift(spec.conductor);

  // Validate relations: parallel nonzero terms.
  for (const auto& rel : spec.relations) {
    require(!rel.terms.empty(), Err::InvalidInput, "empty relation");
    int rs = -1, rd = -1;
    bool nonzero = false;
    for (const auto& [p, c] : rel.terms) {
      int src, dst;
      if (p.arrows.empty()) {
        src = dst = p.vertex;
      } else {
        src = sorted.arrows[p.arrows.front()].src;
        dst = sorted.arrows[p.arrows.back()].dst;
        for (size_t t = 0; t + 1 < p.arrows.size(); ++t)
          require(sorted.arrows[p.arrows[t]].dst == sorted.arrows[p.arrows[t + 1]].src,
                  Err::InvalidInput, "relation path not composable");
      }
      if (rs < 0) {
        rs = src;
        rd = dst;
      } else {
        require(rs == src && rd == dst, Err::InvalidInput, "relation terms not parallel");
      }
      if (!c.lift(spec.conductor).is_zero()) nonzero = true;
    }
    require(nonzero, Err::InvalidInput, "relation with all-zero coefficients");
  }

  // Two-sided ideal span per block: x * g * y over enumerated multipliers.
  for (const auto& rel : spec.relations) {
    int gs, gd;
    {
      const auto& [p0, c0] = rel.terms.front();
      if (p0.arrows.empty()) {
        gs = gd = p0.vertex;
      } else {
        gs = sorted.arrows[p0.arrows.front()].src;
        gd = sorted.arrows[p0.arrows.back()].dst;
      }
    }
    int gmax = 0;
    for (const auto& [p, c] : rel.terms) gmax = std::max(gmax, static_cast<int>(p.arrows.size()));
    for (int yid = 0; yid < static_cast<int>(e.paths.size()); ++yid) {
      const auto& y = e.paths[yid];
      if (y.dst != gs) continue;
      if (static_cast<int>(y.arrows.size()) + gmax > bound) continue;
      for (int xid = 0; xid < static_cast<int>(e.paths.size()); ++xid) {
        const auto& x = e.paths[xid];
        if (x.src != gd) continue;
        if (static_cast<int>(y.arrows.size() + x.arrows.size()) + gmax > bound) continue;
        auto& blk = e.blocks[{y.src, x.dst}];
        std::vector<Cyc> vec(blk.path_ids.size(), zero);
        bool any = false;
        for (const auto& [p, c] : rel.terms) {
          Cyc cl = c.lift(spec.conductor);
          if (cl.is_zero()) continue;
          std::vector<int> arrows = y.arrows;
          arrows.insert(arrows.end(), p.arrows.begin(), p.arrows.end());
          arrows.insert(arrows.end(), x.arrows.begin(), x.arrows.end());
          auto it = e.index.find({y.src, arrows});
          require(it != e.index.end(), Err::NotFiniteDimensional,
                  "relation multiple escapes the enumeration bound");
          vec[blk.pos.at(it->second)] = vec[blk.pos.at(it->second)] + cl;
          any = true;
        }
        if (any) blk.ideal.insert(std::move(vec));
      }
    }
  }

  // Surviving basis paths: non-pivot coordinates per block.
  for (auto& [key, blk] : e.blocks) {
    std::vector<bool> pivot(blk.path_ids.size(), false);
    for (int p : blk.ideal.pivots()) pivot[p] = true;
    for (size_t t = 0; t < blk.path_ids.size(); ++t)
      if (!pivot[t]) {
        out.basis_pos[blk.path_ids[t]] = static_cast<int>(out.basis_ids.size());
        out.basis_ids.push_back(blk.path_ids[t]);
      }
  }
  int stab = 0;
  for (int id : out.basis_ids)
    stab = std::max(stab, static_cast<int>(e.paths[id].arrows.size()));
  out.stab_len = stab;
  if (!acyclic) {
    require(2 * stab <= bound, Err::NotFiniteDimensional,
            "basis did not stabilize within the length bound");
  }
  return out;
}

// Reduce the class of an arbitrary enumerated path to basis coordinates.
std::vector<std::pair<int, Cyc>> reduce_path(const Built& b, int pid) {
  const auto& p = b.e.paths[pid];
  const auto& blk = b.e.blocks.at({p.src, p.dst});
  const Cyc zero = Cyc(Rat(0)).lift(b.conductor);
  std::vector<Cyc> vec(blk.path_ids.size(), zero);
  vec[blk.pos.at(pid)] = Cyc(Rat(1)).lift(b.conductor);
  vec = blk.ideal.reduce(std::move(vec));
  std::vector<std::pair<int, Cyc>> out;
  for (size_t t = 0; t < vec.size(); ++t)
    if (!vec[t].is_zero()) out.emplace_back(blk.path_ids[t], vec[t]);
  return out;
}

}  // namespace

QuiverBasis enumerate_basis(const QuiverAlgebraSpec& spec) {
  Built b = build_quotient_basis(spec);
  QuiverBasis out;
  out.dim_over_field = static_cast<long>(b.basis_ids.size());
  out.max_basis_length = b.stab_len;
  out.paths_enumerated = static_cast<long>(b.e.paths.size());
  return out;
}

Algebra to_algebra(const QuiverAlgebraSpec& spec) {
  Built b = build_quotient_basis(spec);
  int phi = Cyc::phi(spec.conductor);
  int npaths = static_cast<int>(b.basis_ids.size());
  int dim = npaths * phi;
  auto coord = [&](int basis_pos, int e) { return basis_pos * phi + e; };

  // Arrow indices inside paths refer to the label-sorted order.
  std::vector<std::string> sorted_labels;
  for (const auto& a : spec.quiver.arrows) sorted_labels.push_back(a.label);
  std::sort(sorted_labels.begin(), sorted_labels.end());

  std::vector<std::string> labels(dim);
  for (int t = 0; t < npaths; ++t) {
    const auto& p = b.e.paths[b.basis_ids[t]];
    std::string lab;
    if (p.arrows.empty()) {
      lab = "e" + std::to_string(p.src);
    } else {
      for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!lab.empty()) lab += "*";
        lab += sorted_labels[*it];
      }
    }
    for (int e = 0; e < phi; ++e)
      labels[coord(t, e)] = (e == 0) ? lab : lab + "|z" + std::to_string(e);
  }

  // Powers of zeta in the power basis for coefficient expansion.
  std::vector<Cyc> zpow(phi);
  Cyc z = Cyc::zeta(spec.conductor);
  Cyc acc = Cyc(Rat(1)).lift(spec.conductor);
  for (int e = 0; e < phi; ++e) {
    zpow[e] = acc;
    if (e + 1 < phi) acc = acc * z;
  }

  std::vector<SparseVec> table(static_cast<size_t>(dim) * dim);
  for (int tp = 0; tp < npaths; ++tp) {
    const auto& p = b.e.paths[b.basis_ids[tp]];
    for (int tq = 0; tq < npaths; ++tq) {
      const auto& q = b.e.paths[b.basis_ids[tq]];
      // Product (p, e1) * (q, e2): compose q then p.
      if (q.dst != p.src) continue;
      std::vector<int> arrows = q.arrows;
      arrows.insert(arrows.end(), p.arrows.begin(), p.arrows.end());
      auto it = b.e.index.find({q.src, arrows});
      require(it != b.e.index.end(), Err::NotFiniteDimensional,
              "basis product escapes the enumeration bound");
      auto red = reduce_path(b, it->second);
      if (red.empty()) continue;
      for (int e1 = 0; e1 < phi; ++e1) {
        for (int e2 = 0; e2 < phi; ++e2) {
          Cyc scale = zpow[e1] * zpow[e2];
          SparseVec out;
          for (const auto& [rid, c] : red) {
            Cyc val = c * scale;
            int rpos = b.basis_pos.at(rid);
            for (int e3 = 0; e3 < phi; ++e3) {
              const Rat& cc = val.coeffs()[e3];
              if (!cc.is_zero()) out.t.emplace_back(coord(rpos, e3), cc);
            }
          }
          std::sort(out.t.begin(), out.t.end(),
                    [](const auto& a, const auto& bb) { return a.first < bb.first; });
          table[static_cast<size_t>(coord(tp, e1)) * dim + coord(tq, e2)] = std::move(out);
        }
      }
    }
  }

  RatVec unit(dim, Rat(0));
  std::vector<RatVec> idems;
  for (int v = 0; v < spec.quiver.vertices; ++v) {
    auto it = b.e.index.find({v, {}});
    require(it != b.e.index.end(), Err::InvalidInput, "missing vertex path");
    int pos = b.basis_pos.at(it->second);
    RatVec e(dim, Rat(0));
    e[coord(pos, 0)] = Rat(1);
    unit[coord(pos, 0)] = Rat(1);
    idems.push_back(std::move(e));
  }

  std::vector<RatVec> gens = idems;
  for (size_t a = 0; a < spec.quiver.arrows.size(); ++a) {
    int sorted_idx = static_cast<int>(
        std::find(sorted_labels.begin(), sorted_labels.end(), spec.quiver.arrows[a].label) -
        sorted_labels.begin());
    auto it = b.e.index.find({spec.quiver.arrows[a].src, {sorted_idx}});
    if (it == b.e.index.end()) continue;
    auto red = reduce_path(b, it->second);
    RatVec g(dim, Rat(0));
    for (const auto& [rid, c] : red)
      for (int e3 = 0; e3 < phi; ++e3)
        g[coord(b.basis_pos.at(rid), e3)] = c.coeffs()[e3];
    gens.push_back(std::move(g));
  }
  if (phi > 1) {
    RatVec zg(dim, Rat(0));
    for (int v = 0; v < spec.quiver.vertices; ++v) {
      auto it = b.e.index.find({v, {}});
      int pos = b.basis_pos.at(it->second);
      if (phi >= 2) zg[coord(pos, 1)] = Rat(1);
    }
    gens.push_back(std::move(zg));
  }

  return Algebra(std::move(labels), std::move(table), std::move(unit), std::move(idems),
                 std::move(gens));
}

QuiverAlgebraSpec canonical_quiver(const std::vector<ProjPoint>& points,
                                   const std::vector<int>& weights, int conductor) {
  require(points.size() == weights.size(), Err::InvalidInput,
          "points and weights must have the same length");
  int t = static_cast<int>(points.size());
  for (int i = 0; i < t; ++i)
    require(weights[i] >= 2, Err::InvalidInput, "weights must be at least 2");
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      Cyc lhs = points[i].alpha.lift(conductor) * points[j].beta.lift(conductor);
      Cyc rhs = points[j].alpha.lift(conductor) * points[i].beta.lift(conductor);
      require(!(lhs == rhs), Err::DuplicatePoints, "points must be pairwise distinct");
    }

  QuiverAlgebraSpec spec;
  spec.conductor = conductor;
  Quiver& q = spec.quiver;
  q.vertices = 2;
  q.arrows.push_back({0, 1, "u"});
  q.arrows.push_back({0, 1, "v"});
  for (int i = 0; i < t; ++i) {
    int m = weights[i] - 1;
    std::vector<int> interior;
    for (int j = 0; j < m; ++j) {
      interior.push_back(q.vertices);
      ++q.vertices;
    }
    std::vector<int> arm_arrows;
    for (int j = 0; j <= m; ++j) {
      int src = (j == 0) ? 0 : interior[j - 1];
      int dst = (j == m) ? 1 : interior[j];
      arm_arrows.push_back(static_cast<int>(q.arrows.size()));
      q.arrows.push_back({src, dst, "d" + std::to_string(i) + "_" + std::to_string(j)});
    }
    Relation rel;
    QPath arm{0, arm_arrows};
    rel.terms.emplace_back(arm, Cyc(Rat(1)).lift(conductor));
    rel.terms.emplace_back(QPath{0, {0}}, -points[i].beta.lift(conductor));  // u is arrow 0
    rel.terms.emplace_back(QPath{0, {1}}, points[i].alpha.lift(conductor));  // v is arrow 1
    spec.relations.push_back(std::move(rel));
  }
  return spec;
}

QuiverAlgebraSpec squid_quiver(const std::vector<ProjPoint>& points,
                               const std::vector<int>& weights, int conductor) {
  require(points.size() == weights.size(), Err::InvalidInput,
          "points and weights must have the same length");
  int t = static_cast<int>(points.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      Cyc lhs = points[i].alpha.lift(conductor) * points[j].beta.lift(conductor);
      Cyc rhs = points[j].alpha.lift(conductor) * points[i].beta.lift(conductor);
      require(!(lhs == rhs), Err::DuplicatePoints, "points must be pairwise distinct");
    }

  QuiverAlgebraSpec spec;
  spec.conductor = conductor;
  Quiver& q = spec.quiver;
  q.vertices = 2;
  q.arrows.push_back({0, 1, "u"});
  q.arrows.push_back({0, 1, "v"});
  for (int i = 0; i < t; ++i) {
    require(weights[i] >= 1, Err::InvalidInput, "weights must be positive");
    int m = weights[i] - 1;
    int prev = 1;
    int first_arrow = -1;
    for (int j = 0; j < m; ++j) {
      int w = q.vertices++;
      int idx = static_cast<int>(q.arrows.size());
      q.arrows.push_back({prev, w, "c" + std::to_string(i) + "_" + std::to_string(j)});
      if (j == 0) first_arrow = idx;
      prev = w;
    }
    if (m >= 1) {
      Relation rel;
      rel.terms.emplace_back(QPath{0, {0, first_arrow}}, points[i].beta.lift(conductor));
      rel.terms.emplace_back(QPath{0, {1, first_arrow}}, -points[i].alpha.lift(conductor));
      spec.relations.push_back(std::move(rel));
    }
  }
  return spec;
}

QuiverAlgebraSpec euclidean_quiver(EuclideanType type, int p, int q, bool reversed) {
  QuiverAlgebraSpec spec;
  spec.conductor = 1;
  Quiver& qv = spec.quiver;
  auto arrow = [&](int s, int d) {
    if (reversed) std::swap(s, d);
    qv.arrows.push_back({s, d, "a" + std::to_string(qv.arrows.size())});
  };
  switch (type) {
    case EuclideanType::ATilde: {
      require(p >= 1 && q >= 1, Err::UnknownType, "ATilde needs chain lengths p, q >= 1");
      // Two directed chains of lengths p and q from vertex 0 to vertex p.
      qv.vertices = p + q;
      int sink = p;
      for (int i = 0; i < p; ++i) arrow(i, (i + 1 == p) ? sink : i + 1);
      int prev = 0;
      for (int i = 0; i < q; ++i) {
        int nxt = (i + 1 == q) ? sink : p + 1 + i;
        arrow(prev, nxt);
        prev = nxt;
      }
      break;
    }
    case EuclideanType::DTilde: {
      require(p >= 4, Err::UnknownType, "DTilde needs rank >= 4");
      int n = p;
      // Central chain 0..n-4 with two leaves at each end; n+1 vertices.
      int chain_last = n - 4;
      qv.vertices = n + 1;
      int l1 = n - 3, l2 = n - 2, l3 = n - 1, l4 = n;
      arrow(l1, 0);
      arrow(l2, 0);
      for (int i = 0; i < chain_last; ++i) arrow(i, i + 1);
      arrow(l3, chain_last);
      arrow(l4, chain_last);
      break;
    }
    case EuclideanType::E6Tilde:
    case EuclideanType::E7Tilde:
    case EuclideanType::E8Tilde: {
      std::vector<int> arms;
      if (type == EuclideanType::E6Tilde) arms = {2, 2, 2};
      if (type == EuclideanType::E7Tilde) arms = {1, 3, 3};
      if (type == EuclideanType::E8Tilde) arms = {1, 2, 5};
      qv.vertices = 1;
      for (int len : arms) {
        int prev = -1;
        for (int j = 0; j < len; ++j) {
          int v = qv.vertices++;
          int toward = (j == 0) ? 0 : prev;
          arrow(v, toward);
          prev = v;
        }
      }
      break;
    }
  }
  return spec;
}

EuclideanType parse_euclidean(const std::string& name) {
  if (name == "A" || name == "Atilde" || name == "A~") return EuclideanType::ATilde;
  if (name == "D" || name == "Dtilde" || name == "D~") return EuclideanType::DTilde;
  if (name == "E6" || name == "E6tilde" || name == "E~6") return EuclideanType::E6Tilde;
  if (name == "E7" || name == "E7tilde" || name == "E~7") return EuclideanType::E7Tilde;
  if (name == "E8" || name == "E8tilde" || name == "E~8") return EuclideanType::E8Tilde;
  fail(Err::UnknownType, "unknown extended Dynkin type '" + name + "'");
}

QuiverAlgebraSpec cyclic_truncated(int n, int kill_len, int conductor) {
  require(n >= 1 && kill_len >= 1, Err::InvalidInput, "cyclic quiver needs n, kill_len >= 1");
  QuiverAlgebraSpec spec;
  spec.conductor = conductor;
  spec.length_bound = 2 * kill_len + 2;
  Quiver& q = spec.quiver;
  q.vertices = n;
  char buf[16];
  for (int v = 0; v < n; ++v) {
    std::snprintf(buf, sizeof buf, "a%02d", v);
    q.arrows.push_back({v, (v + 1) % n, buf});
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> arrows;
    for (int t = 0; t < kill_len; ++t) arrows.push_back((v + t) % n);
    Relation rel;
    rel.terms.emplace_back(QPath{v, arrows}, Cyc(Rat(1)).lift(conductor));
    spec.relations.push_back(std::move(rel));
  }
  return spec;
}

}  // namespace hecurve
