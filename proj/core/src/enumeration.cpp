#include "resilat/enumeration.hpp"

#include <algorithm>
#include <map>

#include "resilat/logics.hpp"

namespace resilat {

namespace {

std::vector<std::string> generic_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
  return names;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int n, const EnumerationCaps& caps) {
  if (n < 1 || n > caps.lattice)
    throw Error("SizeCapExceeded", "lattice order " + std::to_string(n) + " outside [1, " +
                                       std::to_string(caps.lattice) + "]");
  auto names = generic_names(n);
  std::map<std::string, FiniteLattice> dedup;
  if (n == 1) {
    dedup.emplace("", build_lattice_indexed(names, {}));
  } else {
    const int m = n - 2;  // middle elements 1..n-2; 0 = bottom, n-1 = top
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j) slots.emplace_back(i + 1, j + 1);
    const int bits = static_cast<int>(slots.size());
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
      // strict order among the middle elements: antisymmetric + transitive
      std::vector<std::uint8_t> rel(n * n, 0);
      bool ok = true;
      for (int b = 0; b < bits && ok; ++b)
        if (mask >> b & 1) {
          auto [i, j] = slots[b];
          if (rel[j * n + i]) ok = false;
          rel[i * n + j] = 1;
        }
      for (int i = 1; i <= m && ok; ++i)
        for (int j = 1; j <= m && ok; ++j)
          if (rel[i * n + j])
            for (int k = 1; k <= m; ++k)
              if (rel[j * n + k] && !rel[i * n + k]) {
                ok = false;
                break;
              }
      if (!ok) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int k = 0; k < n; ++k) {
        pairs.emplace_back(0, k);
        pairs.emplace_back(k, n - 1);
      }
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          if (rel[i * n + j]) pairs.emplace_back(i, j);
      try {
        FiniteLattice L = build_lattice_indexed(names, pairs);
        dedup.emplace(canonical_form(L), std::move(L));
      } catch (const Error&) {
        // not a lattice; skip
      }
    }
  }
  std::vector<FiniteLattice> out;
  out.reserve(dedup.size());
  for (auto& [key, L] : dedup) out.push_back(std::move(L));
  return out;
}

std::vector<Involution> enumerate_involutions(const FiniteLattice& L) {
  const int n = L.n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Involution> out;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = perm[perm[x]] == x;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        if (L.le(x, y)) ok = L.le(perm[y], perm[x]);
    if (ok) out.push_back(Involution{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SectionFamily> enumerate_section_families(const FiniteLattice& L, FamilyMode mode) {
  const int n = L.n;
  // all admissible maps per base, then the cartesian product
  std::vector<std::vector<UnTable>> per_base(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> members = section(L, a).members;
    const int k = static_cast<int>(members.size());
    std::vector<int> choice(k, 0);  // index into members; the map of members[i]
    auto top_pos = static_cast<int>(std::find(members.begin(), members.end(), L.top) -
                                    members.begin());
    while (true) {
      UnTable map(n, -1);
      for (int i = 0; i < k; ++i) map[members[i]] = members[choice[i]];
      bool ok = map[L.top] == a;
      for (int i = 0; i < k && ok; ++i) {
        int x = members[i];
        for (int j = 0; j < k && ok; ++j) {
          int y = members[j];
          if (L.le(x, y)) ok = L.le(map[y], map[x]);
        }
        if (ok) {
          int xx = map[map[x]];
          ok = mode == FamilyMode::involutive ? xx == x : L.le(x, xx);
        }
      }
      if (ok) per_base[a].push_back(std::move(map));
      // advance; the top slot is forced, so skip it
      int i = 0;
      for (; i < k; ++i) {
        if (i == top_pos) {
          choice[i] = 0;
          continue;
        }
        if (++choice[i] < k) break;
        choice[i] = 0;
      }
      if (i == k) break;
    }
    if (per_base[a].empty()) return {};
  }

  std::vector<SectionFamily> out;
  std::vector<int> pick(n, 0);
  while (true) {
    std::vector<UnTable> maps(n);
    for (int a = 0; a < n; ++a) maps[a] = per_base[a][pick[a]];
    out.push_back(SectionFamily{std::move(maps)});
    int a = 0;
    for (; a < n; ++a) {
      if (++pick[a] < static_cast<int>(per_base[a].size())) break;
      pick[a] = 0;
    }
    if (a == n) break;
  }
  return out;
}

std::vector<RRLGroupoid> enumerate_rrl_groupoids(const FiniteLattice& L,
                                                 const EnumerationCaps& caps) {
  const int n = L.n;
  if (n > caps.groupoid)
    throw Error("SizeCapExceeded", "groupoid order " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(caps.groupoid));
  // Adjointness ties each (.) column y only to the arrow row y, so the
  // valid columns can be enumerated independently and combined.
  std::vector<std::vector<std::pair<UnTable, UnTable>>> columns(n);  // (odot col, arrow row)
  for (int y = 0; y < n; ++y) {
    UnTable col(n, 0);
    col[L.top] = y;  // 1 (.) y = y
    std::vector<int> free_rows;
    for (int x = 0; x < n; ++x)
      if (x != L.top) free_rows.push_back(x);
    std::vector<int> choice(free_rows.size(), 0);
    while (true) {
      for (size_t i = 0; i < free_rows.size(); ++i) col[free_rows[i]] = choice[i];
      UnTable arrow_row(n, 0);
      bool ok = true;
      for (int z = 0; z < n && ok; ++z) {
        int acc = -1;
        for (int x = 0; x < n; ++x)
          if (L.le(col[x], z)) acc = acc < 0 ? x : L.v(acc, x);
        // the join of {x : x (.) y <= z} must itself qualify
        ok = acc >= 0 && L.le(col[acc], z);
        if (ok) {
          arrow_row[z] = acc;
          for (int x = 0; x < n && ok; ++x) ok = L.le(col[x], z) == L.le(x, acc);
        }
      }
      if (ok) columns[y].emplace_back(col, arrow_row);
      size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < n) break;
        choice[i] = 0;
      }
      if (i == choice.size()) break;
    }
    if (columns[y].empty()) return {};
  }

  std::vector<RRLGroupoid> out;
  std::vector<int> pick(n, 0);
  while (true) {
    BinTable odot(n * n, 0), arrow(n * n, 0);
    for (int y = 0; y < n; ++y) {
      const auto& [col, arow] = columns[y][pick[y]];
      for (int x = 0; x < n; ++x) odot[x * n + y] = col[x];
      for (int z = 0; z < n; ++z) arrow[y * n + z] = arow[z];
    }
    out.push_back(validate_rrl(L, odot, arrow));
    int y = 0;
    for (; y < n; ++y) {
      if (++pick[y] < static_cast<int>(columns[y].size())) break;
      pick[y] = 0;
    }
    if (y == n) break;
  }
  return out;
}

std::vector<BasicAlgebra> enumerate_basic_algebras(int n, const EnumerationCaps& caps) {
  if (n < 1 || n > caps.basic)
    throw Error("SizeCapExceeded", "basic-algebra order " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(caps.basic));
  std::map<std::string, BasicAlgebra> dedup;
  for (const FiniteLattice& L : enumerate_lattices(n, EnumerationCaps{std::max(n, 1), 0, 0})) {
    for (const SectionFamily& F : enumerate_section_families(L, FamilyMode::involutive)) {
      BasicAlgebra A = basic_from_sectioned(SectionedLattice{L, std::nullopt, F});
      FiniteLattice LA = induced_lattice(A);
      dedup.emplace(canonical_form(LA, {&A.oplus}, {&A.neg_table}), std::move(A));
    }
  }
  std::vector<BasicAlgebra> out;
  out.reserve(dedup.size());
  for (auto& [key, A] : dedup) out.push_back(std::move(A));
  return out;
}

CensusRow census(const std::string& kind, int n, const EnumerationCaps& caps) {
  CensusRow row;
  row.kind = kind;
  row.size = n;
  if (kind == "lattice") {
    for (const FiniteLattice& L : enumerate_lattices(n, caps)) {
      ++row.total;
      if (is_distributive(L)) ++row.flag_counts["distributive"];
      if (is_boolean(L)) ++row.flag_counts["boolean"];
      if (is_sectionally_pseudocomplemented(L)) ++row.flag_counts["sectionally-pseudocomplemented"];
    }
  } else if (kind == "rrl-groupoid") {
    std::map<std::string, RRLGroupoid> dedup;
    for (const FiniteLattice& L : enumerate_lattices(n, EnumerationCaps{std::max(n, 1), 0, 0}))
      for (RRLGroupoid& G : enumerate_rrl_groupoids(L, caps))
        dedup.emplace(canonical_form(G.lattice, {&G.odot, &G.arrow}), std::move(G));
    for (const auto& [key, G] : dedup) {
      ++row.total;
      PropertyReport r = classify(G);
      if (r.integral) ++row.flag_counts["integral"];
      if (r.commutative) ++row.flag_counts["commutative"];
      if (r.associative) ++row.flag_counts["associative"];
      if (r.involutive) ++row.flag_counts["involutive"];
      if (r.double_negation) ++row.flag_counts["double-negation"];
      if (r.divisibility) ++row.flag_counts["divisibility"];
      if (r.condition_C) ++row.flag_counts["condition-C"];
      if (r.I3) ++row.flag_counts["I3"];
      if (r.I3_star) ++row.flag_counts["I3-star"];
      if (r.lukasiewicz_type) ++row.flag_counts["lukasiewicz-type"];
    }
  } else if (kind == "basic-algebra") {
    for (const BasicAlgebra& A : enumerate_basic_algebras(n, caps)) {
      ++row.total;
      Remark4Report r = check_remark4(A);
      if (r.oplus_associative) ++row.flag_counts["mv"];
      if (r.oplus_commutative) ++row.flag_counts["commutative"];
      if (check_OMI(A)) ++row.flag_counts["omi"];
    }
  } else {
    throw Error("UnknownKind", "census does not cover kind '" + kind + "'");
  }
  return row;
}

}  // namespace resilat
