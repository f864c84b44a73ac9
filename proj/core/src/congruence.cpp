#include "resilat/congruence.hpp"

#include <algorithm>

namespace resilat {

AlgebraOps ops_of(const FiniteLattice& L) { return AlgebraOps{L.n, {L.join, L.meet}, {}}; }

AlgebraOps ops_of(const RRLGroupoid& G) {
  return AlgebraOps{G.lattice.n, {G.lattice.join, G.lattice.meet, G.odot, G.arrow}, {}};
}

AlgebraOps ops_of(const BasicAlgebra& A) { return AlgebraOps{A.n, {A.oplus}, {A.neg_table}}; }

std::vector<int> Congruence::cls(int x) const {
  std::vector<int> out;
  for (int y = 0; y < static_cast<int>(class_of.size()); ++y)
    if (class_of[y] == class_of[x]) out.push_back(y);
  return out;
}

namespace {

void normalize(Congruence& c) {
  const int n = static_cast<int>(c.class_of.size());
  std::vector<int> least(n, -1);
  for (int x = 0; x < n; ++x) {
    int& l = least[c.class_of[x]];
    if (l < 0) l = x;
  }
  for (int x = 0; x < n; ++x) c.class_of[x] = least[c.class_of[x]];
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Closes a partition under compatibility with every basic operation.
Congruence close(const AlgebraOps& A, UnionFind uf) {
  const int n = A.size;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const BinTable& f : A.binary)
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (uf.find(x) != uf.find(y)) continue;
          for (int z = 0; z < n; ++z) {
            changed |= uf.merge(f[x * n + z], f[y * n + z]);
            changed |= uf.merge(f[z * n + x], f[z * n + y]);
          }
        }
    for (const UnTable& f : A.unary)
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (uf.find(x) == uf.find(y)) changed |= uf.merge(f[x], f[y]);
  }
  Congruence c;
  c.class_of.resize(n);
  for (int x = 0; x < n; ++x) c.class_of[x] = uf.find(x);
  normalize(c);
  return c;
}

}  // namespace

Congruence identity_congruence(int size) {
  Congruence c;
  c.class_of.resize(size);
  for (int i = 0; i < size; ++i) c.class_of[i] = i;
  return c;
}

Congruence full_congruence(int size) {
  Congruence c;
  c.class_of.assign(size, 0);
  return c;
}

Congruence principal_congruence(const AlgebraOps& A, int a, int b) {
  UnionFind uf(A.size);
  uf.merge(a, b);
  return close(A, std::move(uf));
}

Congruence join_congruences(const AlgebraOps& A, const Congruence& t, const Congruence& p) {
  UnionFind uf(A.size);
  for (int x = 0; x < A.size; ++x) {
    uf.merge(x, t.class_of[x]);
    uf.merge(x, p.class_of[x]);
  }
  return close(A, std::move(uf));
}

Congruence meet_congruences(const Congruence& t, const Congruence& p) {
  const int n = static_cast<int>(t.class_of.size());
  Congruence c;
  c.class_of.resize(n);
  for (int x = 0; x < n; ++x) c.class_of[x] = t.class_of[x] * n + p.class_of[x];
  // re-key to class ids within range, then normalize to least members
  std::vector<int> key = c.class_of;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (int x = 0; x < n; ++x)
    c.class_of[x] = static_cast<int>(std::lower_bound(key.begin(), key.end(), c.class_of[x]) -
                                     key.begin());
  normalize(c);
  return c;
}

CongruenceLattice all_congruences(const AlgebraOps& A) {
  const int n = A.size;
  std::vector<Congruence> found;
  auto add = [&found](Congruence c) {
    if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(std::move(c));
  };
  add(identity_congruence(n));
  add(full_congruence(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(principal_congruence(A, a, b));
  // close under pairwise join (meet = refinement is automatic but cheap)
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      add(join_congruences(A, found[i], found[j]));
      add(meet_congruences(found[i], found[j]));
    }
  std::sort(found.begin(), found.end(),
            [](const Congruence& a, const Congruence& b) { return a.class_of < b.class_of; });

  CongruenceLattice CL;
  CL.congruences = std::move(found);
  const int m = CL.count();
  CL.leq.assign(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool refines = true;
      for (int x = 0; x < n && refines; ++x)
        for (int y = 0; y < n; ++y)
          if (CL.congruences[i].related(x, y) && !CL.congruences[j].related(x, y)) {
            refines = false;
            break;
          }
      CL.leq[i * m + j] = refines ? 1 : 0;
    }
  return CL;
}

bool check_permutable(const CongruenceLattice& CL) {
  if (CL.congruences.empty()) return true;
  const int n = static_cast<int>(CL.congruences.front().class_of.size());
  for (const Congruence& t : CL.congruences)
    for (const Congruence& p : CL.congruences)
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
          bool tp = false, pt = false;
          for (int y = 0; y < n; ++y) {
            tp = tp || (t.related(x, y) && p.related(y, z));
            pt = pt || (p.related(x, y) && t.related(y, z));
          }
          if (tp != pt) return false;
        }
  return true;
}

bool check_distributive_con(const AlgebraOps& A, const CongruenceLattice& CL) {
  const auto& cs = CL.congruences;
  for (const Congruence& x : cs)
    for (const Congruence& y : cs)
      for (const Congruence& z : cs) {
        Congruence lhs = meet_congruences(x, join_congruences(A, y, z));
        Congruence rhs = join_congruences(A, meet_congruences(x, y), meet_congruences(x, z));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

TermReport check_terms(const RRLGroupoid& G) {
  const FiniteLattice& L = G.lattice;
  const int n = L.n;
  PropertyReport r = classify(G);
  TermReport rep;

  auto b = [&](int x, int y) { return L.m(G.arr(x, y), G.arr(y, x)); };
  auto p = [&](int x, int y, int z) { return L.v(G.prod(b(y, z), x), G.prod(b(x, y), z)); };

  rep.malcev = Verdict::holds;
  for (int x = 0; x < n && holds(rep.malcev); ++x)
    for (int y = 0; y < n; ++y)
      if (p(x, y, y) != x || p(x, x, y) != y) {
        rep.malcev = Verdict::fails;
        rep.witness = {x, y};
        break;
      }

  rep.one_regular_term = Verdict::holds;
  for (int x = 0; x < n && holds(rep.one_regular_term); ++x)
    for (int y = 0; y < n; ++y)
      if ((b(x, y) == L.top) != (x == y)) {
        rep.one_regular_term = Verdict::fails;
        rep.witness = {x, y};
        break;
      }

  if (!r.double_negation) {
    rep.zero_term = Verdict::not_applicable;
  } else {
    rep.zero_term = Verdict::holds;
    for (int x = 0; x < n && holds(rep.zero_term); ++x)
      for (int y = 0; y < n; ++y)
        if ((G.arr(b(x, y), L.bottom) == L.bottom) != (x == y)) {
          rep.zero_term = Verdict::fails;
          rep.witness = {x, y};
          break;
        }
  }

  if (!r.double_negation || !r.divisibility) {
    rep.local_zero_terms = Verdict::not_applicable;
  } else {
    rep.local_zero_terms = Verdict::holds;
    for (int x = 0; x < n && holds(rep.local_zero_terms); ++x)
      for (int y = 0; y < n; ++y) {
        bool terms_fix_x = G.arr(G.arr(x, y), L.bottom) == x && L.v(x, y) == x;
        if (terms_fix_x != (y == L.bottom)) {
          rep.local_zero_terms = Verdict::fails;
          rep.witness = {x, y};
          break;
        }
      }
  }
  return rep;
}

RegularityReport check_regularity(const AlgebraOps& A, const CongruenceLattice& CL, int c) {
  RegularityReport rep;
  rep.c_regular = true;
  rep.c_locally_regular = true;
  rep.fully_regular = true;
  const int n = A.size;
  for (const Congruence& t : CL.congruences)
    for (const Congruence& p : CL.congruences) {
      if (t == p) continue;
      if (t.cls(c) == p.cls(c)) rep.c_regular = false;
      for (int a = 0; a < n; ++a)
        if (t.cls(a) == p.cls(a)) {
          rep.fully_regular = false;
          if (t.cls(c) != p.cls(c)) rep.c_locally_regular = false;
        }
    }
  return rep;
}

}  // namespace resilat
