#include <doctest.h>

#include <set>

#include "fixtures.hpp"

using namespace resilat;
using fixtures::chain;

namespace {

// Independent oracle: count bounded lattices of order n up to isomorphism
// by filtering every binary relation on ordered pairs that is a partial
// order, without the constructive shortcuts of the library routine.
int oracle_lattice_count(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "x" + std::to_string(i);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::set<std::string> forms;
  for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) pairs.push_back(slots[b]);
    try {
      forms.insert(canonical_form(build_lattice_indexed(names, pairs)));
    } catch (const Error&) {
    }
  }
  return static_cast<int>(forms.size());
}

// Independent oracle: count residuated structures on a fixed lattice by
// brute force over every (.) table with the unit row fixed.
int oracle_groupoid_count(const FiniteLattice& L) {
  const int n = L.n;
  std::vector<int> free_cells;
  for (int x = 0; x < n; ++x)
    if (x != L.top)
      for (int y = 0; y < n; ++y) free_cells.push_back(x * n + y);
  long long total = 1;
  for (size_t i = 0; i < free_cells.size(); ++i) total *= n;
  int count = 0;
  for (long long code = 0; code < total; ++code) {
    BinTable odot(n * n);
    for (int y = 0; y < n; ++y) odot[L.top * n + y] = y;
    long long c = code;
    for (int cell : free_cells) {
      odot[cell] = static_cast<int>(c % n);
      c /= n;
    }
    try {
      validate_rrl(L, odot, derive_arrow_from_odot(L, odot));
      ++count;
    } catch (const Error&) {
    }
  }
  return count;
}

// Independent oracle: brute force over every ((+), ]) pair on n elements.
int oracle_basic_count(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "x" + std::to_string(i);
  long long bin_total = 1;
  for (int i = 0; i < n * n; ++i) bin_total *= n;
  long long un_total = 1;
  for (int i = 0; i < n; ++i) un_total *= n;
  std::set<std::string> forms;
  for (long long bc = 0; bc < bin_total; ++bc) {
    BinTable oplus(n * n);
    long long c = bc;
    for (int i = 0; i < n * n; ++i) {
      oplus[i] = static_cast<int>(c % n);
      c /= n;
    }
    for (long long uc = 0; uc < un_total; ++uc) {
      UnTable neg(n);
      long long u = uc;
      for (int i = 0; i < n; ++i) {
        neg[i] = static_cast<int>(u % n);
        u /= n;
      }
      try {
        BasicAlgebra A = validate_basic(names, oplus, neg, 0);
        forms.insert(canonical_form(induced_lattice(A), {&A.oplus}, {&A.neg_table}));
      } catch (const Error&) {
      }
    }
  }
  return static_cast<int>(forms.size());
}

}  // namespace

TEST_CASE("lattice enumeration agrees with the brute-force oracle") {
  const int expected[] = {1, 1, 1, 2, 5};  // orders 1..5
  for (int n = 1; n <= 5; ++n) {
    CHECK(static_cast<int>(enumerate_lattices(n).size()) == expected[n - 1]);
    if (n <= 4) CHECK(oracle_lattice_count(n) == expected[n - 1]);
  }
  CHECK(enumerate_lattices(6).size() == 15);
  CHECK_THROWS_WITH_AS(enumerate_lattices(8), doctest::Contains("SizeCapExceeded"), Error);

  // order 5 includes the chain, the pentagon and the diamond
  std::set<std::string> forms;
  for (const FiniteLattice& L : enumerate_lattices(5)) forms.insert(canonical_form(L));
  CHECK(forms.count(canonical_form(chain(5))));
  CHECK(forms.count(canonical_form(fixtures::n5())));
  CHECK(forms.count(canonical_form(fixtures::m3())));
  CHECK(forms.size() == 5);  // pairwise distinct canonical forms
}

TEST_CASE("involution enumeration") {
  CHECK(enumerate_involutions(chain(3)).size() == 1);
  CHECK(enumerate_involutions(chain(3)).front().map == UnTable{2, 1, 0});
  SectionedLattice MO2 = std::get<SectionedLattice>(example("mo2"));
  CHECK(enumerate_involutions(MO2.lattice).size() == 10);
  CHECK(enumerate_involutions(fixtures::n5()).size() == 1);
}

TEST_CASE("section-family enumeration") {
  CHECK(enumerate_section_families(chain(3), FamilyMode::involutive).size() == 1);
  // the 2x2 lattice admits two involutive families: atom swap and atom fix
  CHECK(enumerate_section_families(fixtures::boolean4(), FamilyMode::involutive).size() == 2);
}

TEST_CASE("groupoid enumeration agrees with the brute-force oracle") {
  FiniteLattice c2 = chain(2);
  CHECK(enumerate_rrl_groupoids(c2).size() == 1);
  CHECK(oracle_groupoid_count(c2) == 1);

  FiniteLattice c3 = chain(3);
  CHECK(enumerate_rrl_groupoids(c3).size() == oracle_groupoid_count(c3));
  CHECK(enumerate_rrl_groupoids(c3).size() == 6);

  FiniteLattice b4 = fixtures::boolean4();
  CHECK(enumerate_rrl_groupoids(b4).size() == oracle_groupoid_count(b4));
}

TEST_CASE("basic-algebra enumeration agrees with the brute-force oracle") {
  CHECK(enumerate_basic_algebras(2).size() == 1);
  CHECK(enumerate_basic_algebras(3).size() == 1);
  CHECK(oracle_basic_count(2) == 1);
  CHECK(oracle_basic_count(3) == 1);
  // the unique 3-element basic algebra is the Lukasiewicz chain
  BasicAlgebra A = enumerate_basic_algebras(3).front();
  BasicAlgebra L3 = mv_chain(3);
  CHECK(canonical_form(induced_lattice(A), {&A.oplus}, {&A.neg_table}) ==
        canonical_form(induced_lattice(L3), {&L3.oplus}, {&L3.neg_table}));
  CHECK(enumerate_basic_algebras(4).size() == 3);
  CHECK(enumerate_basic_algebras(5).size() == 4);
}

TEST_CASE("structure-correspondence counting") {
  // involutive groupoids with the join identity correspond to
  // (involution, extensive family) pairs on the same lattice
  for (int n = 1; n <= 4; ++n)
    for (const FiniteLattice& L : enumerate_lattices(n)) {
      std::set<std::pair<BinTable, BinTable>> from_pairs;
      for (const Involution& t : enumerate_involutions(L))
        for (const SectionFamily& F : enumerate_section_families(L, FamilyMode::extensive))
          from_pairs.emplace([&] {
            RRLGroupoid G = groupoid_from_sectioned(SectionedLattice{L, t, F});
            return std::make_pair(G.odot, G.arrow);
          }());
      std::set<std::pair<BinTable, BinTable>> direct;
      for (const RRLGroupoid& G : enumerate_rrl_groupoids(L)) {
        PropertyReport r = classify(G);
        if (r.involutive && r.I3) direct.emplace(G.odot, G.arrow);
      }
      // the transform hits exactly the involutive instances with the join
      // identity, one for each (involution, family) pair
      CHECK(from_pairs == direct);
    }
}

TEST_CASE("census") {
  CensusRow r2 = census("rrl-groupoid", 2);
  CHECK(r2.total == 1);
  CHECK(r2.flag_counts.at("integral") == 1);
  CHECK(r2.flag_counts.at("commutative") == 1);
  CHECK(r2.flag_counts.at("involutive") == 1);
  CHECK(r2.flag_counts.at("lukasiewicz-type") == 1);

  CensusRow b3 = census("basic-algebra", 3);
  CHECK(b3.total == 1);
  CHECK(b3.flag_counts.at("mv") == 1);

  for (int n = 1; n <= 4; ++n) {
    CensusRow l = census("lattice", n);
    CHECK(l.total == (n == 4 ? 2 : 1));
  }

  CHECK_THROWS_WITH_AS(census("nelson", 3), doctest::Contains("UnknownKind"), Error);

  // determinism: a second run yields identical rows
  CensusRow again = census("rrl-groupoid", 3);
  CensusRow again2 = census("rrl-groupoid", 3);
  CHECK(again.total == again2.total);
  CHECK(again.flag_counts == again2.flag_counts);
}
