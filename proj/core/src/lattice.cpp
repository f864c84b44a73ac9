#include "resilat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace resilat {

int element_index(const FiniteLattice& L, const std::string& name) {
  for (int i = 0; i < L.n; ++i)
    if (L.names[i] == name) return i;
  throw Error("UnknownName", "no element named '" + name + "'");
}

FiniteLattice build_lattice(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& order_pairs) {
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (!idx.emplace(elements[i], i).second)
      throw Error("DuplicateName", "element name '" + elements[i] + "' repeated");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(order_pairs.size());
  for (const auto& [a, b] : order_pairs) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw Error("UnknownName", "order pair refers to '" + a + "'");
    if (ib == idx.end()) throw Error("UnknownName", "order pair refers to '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return build_lattice_indexed(elements, pairs);
}

FiniteLattice build_lattice_indexed(const std::vector<std::string>& elements,
                                    const std::vector<std::pair<int, int>>& order_pairs) {
  FiniteLattice L;
  L.names = elements;
  L.n = static_cast<int>(elements.size());
  const int n = L.n;
  if (n == 0) throw Error("NoBounds", "empty carrier");
  L.leq.assign(n * n, 0);
  for (int i = 0; i < n; ++i) L.leq[i * n + i] = 1;
  for (auto [a, b] : order_pairs) L.leq[a * n + b] = 1;
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (L.leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (L.leq[k * n + j]) L.leq[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L.le(i, j) && L.le(j, i))
        throw Error("CycleError", "antisymmetry fails between '" + elements[i] + "' and '" + elements[j] + "'", {i, j});

  auto lub = [&](int x, int y) -> int {
    int best = -1;
    for (int z = 0; z < n; ++z) {
      if (!L.le(x, z) || !L.le(y, z)) continue;
      if (best == -1 || L.le(z, best)) best = z;
    }
    if (best == -1) return -1;
    // best must lie below every upper bound, else no unique lub
    for (int z = 0; z < n; ++z)
      if (L.le(x, z) && L.le(y, z) && !L.le(best, z)) return -1;
    return best;
  };
  auto glb = [&](int x, int y) -> int {
    int best = -1;
    for (int z = 0; z < n; ++z) {
      if (!L.le(z, x) || !L.le(z, y)) continue;
      if (best == -1 || L.le(best, z)) best = z;
    }
    if (best == -1) return -1;
    for (int z = 0; z < n; ++z)
      if (L.le(z, x) && L.le(z, y) && !L.le(z, best)) return -1;
    return best;
  };

  L.bottom = L.top = -1;
  for (int x = 0; x < n; ++x) {
    bool least = true, greatest = true;
    for (int y = 0; y < n; ++y) {
      least = least && L.le(x, y);
      greatest = greatest && L.le(y, x);
    }
    if (least) L.bottom = x;
    if (greatest) L.top = x;
  }
  if (L.bottom < 0 || L.top < 0)
    throw Error("NoBounds", L.bottom < 0 ? "no least element" : "no greatest element");

  L.join.assign(n * n, 0);
  L.meet.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int j = lub(x, y), m = glb(x, y);
      if (j < 0 || m < 0)
        throw Error("NotALattice",
                    "pair ('" + elements[x] + "','" + elements[y] + "') lacks a unique " +
                        (j < 0 ? "lub" : "glb"),
                    {x, y});
      L.join[x * n + y] = j;
      L.meet[x * n + y] = m;
    }
  return L;
}

Involution validate_involution(const FiniteLattice& L, const UnTable& map) {
  const int n = L.n;
  if (static_cast<int>(map.size()) != n)
    throw Error("NotInvolutive", "map not total on the carrier");
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= n) throw Error("NotInvolutive", "map value out of range", {x});
    if (map[map[x]] != x)
      throw Error("NotInvolutive", "map(map('" + L.names[x] + "')) != '" + L.names[x] + "'", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.le(x, y) && !L.le(map[y], map[x]))
        throw Error("NotAntitone",
                    "'" + L.names[x] + "' <= '" + L.names[y] + "' but images are not reversed",
                    {x, y});
  return Involution{map};
}

bool is_distributive(const FiniteLattice& L) {
  const int n = L.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.m(x, L.v(y, z)) != L.v(L.m(x, y), L.m(x, z))) return false;
  return true;
}

bool is_boolean(const FiniteLattice& L) {
  if (!is_distributive(L)) return false;
  for (int x = 0; x < L.n; ++x) {
    bool has_complement = false;
    for (int y = 0; y < L.n && !has_complement; ++y)
      has_complement = L.v(x, y) == L.top && L.m(x, y) == L.bottom;
    if (!has_complement) return false;
  }
  return true;
}

Section section(const FiniteLattice& L, int base) {
  Section s;
  s.base = base;
  for (int x = 0; x < L.n; ++x)
    if (L.le(base, x)) s.members.push_back(x);
  return s;
}

namespace {

// Encodes the leq table plus any extra operation tables under the
// relabeling perm (perm[i] = new index of element i).
std::string encode(const FiniteLattice& L, const std::vector<int>& perm,
                   const std::vector<const BinTable*>& bins,
                   const std::vector<const UnTable*>& uns) {
  const int n = L.n;
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::string out;
  out.reserve(n * n * (1 + bins.size()) + n * uns.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back(L.le(inv[i], inv[j]) ? '1' : '0');
  for (const BinTable* t : bins)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out.push_back(static_cast<char>('a' + perm[(*t)[inv[i] * n + inv[j]]]));
  for (const UnTable* t : uns)
    for (int i = 0; i < n; ++i)
      out.push_back(static_cast<char>('a' + perm[(*t)[inv[i]]]));
  return out;
}

}  // namespace

std::string canonical_form(const FiniteLattice& L,
                           const std::vector<const BinTable*>& binary_ops,
                           const std::vector<const UnTable*>& unary_ops) {
  const int n = L.n;
  // middle elements permute freely; bottom -> 0 and top -> n-1 stay fixed
  std::vector<int> middle;
  for (int i = 0; i < n; ++i)
    if (i != L.bottom && i != L.top) middle.push_back(i);
  std::sort(middle.begin(), middle.end());

  std::string best;
  std::vector<int> perm(n);
  do {
    perm[L.bottom] = 0;
    if (L.top != L.bottom) perm[L.top] = n - 1;
    for (int k = 0; k < static_cast<int>(middle.size()); ++k) perm[middle[k]] = k + 1;
    std::string enc = encode(L, perm, binary_ops, unary_ops);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& L1, const FiniteLattice& L2) {
  if (L1.n != L2.n) return std::nullopt;
  const int n = L1.n;
  std::vector<int> middle1, middle2;
  for (int i = 0; i < n; ++i)
    if (i != L1.bottom && i != L1.top) middle1.push_back(i);
  for (int i = 0; i < n; ++i)
    if (i != L2.bottom && i != L2.top) middle2.push_back(i);
  std::sort(middle2.begin(), middle2.end());

  std::vector<int> f(n, -1);
  do {
    f[L1.bottom] = L2.bottom;
    f[L1.top] = L2.top;
    for (size_t k = 0; k < middle1.size(); ++k) f[middle1[k]] = middle2[k];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = L1.le(x, y) == L2.le(f[x], f[y]);
    if (ok) return f;
  } while (std::next_permutation(middle2.begin(), middle2.end()));
  return std::nullopt;
}

}  // namespace resilat
