#include <doctest.h>

#include "fixtures.hpp"

using namespace resilat;
using fixtures::chain;
using fixtures::l3;

namespace {

// Lukasiewicz 3-chain tables, written out as an independent fixture.
const BinTable l3_odot = {0, 0, 0,   //
                          0, 0, 1,   //
                          0, 1, 2};
const BinTable l3_arrow = {2, 2, 2,  //
                           1, 2, 2,  //
                           0, 1, 2};

}  // namespace

TEST_CASE("validate_rrl accepts the classical 2-chain") {
  FiniteLattice L = chain(2);
  RRLGroupoid G = validate_rrl(L, {0, 0, 0, 1}, {1, 1, 0, 1});
  CHECK(G.prod(1, 1) == 1);
  CHECK(G.arr(1, 0) == 0);
}

TEST_CASE("validate_rrl accepts the Lukasiewicz 3-chain") {
  RRLGroupoid G = validate_rrl(chain(3), l3_odot, l3_arrow);
  CHECK(G.prod(1, 1) == 0);
  CHECK(G.arr(1, 0) == 1);
  CHECK(G == l3());  // Theorem-5 construction from the MV chain agrees
}

TEST_CASE("validate_rrl rejects bad tables") {
  FiniteLattice L = chain(3);
  BinTable meet = L.meet;
  BinTable all_top(9, 2);
  try {
    validate_rrl(L, meet, all_top);
    FAIL("expected AdjointnessFails");
  } catch (const Error& e) {
    CHECK(e.code() == "AdjointnessFails");
    CHECK(e.witness().size() == 3);
  }
  BinTable bad_unit = meet;
  bad_unit[2 * 3 + 1] = 0;  // 1 (.) m = 0
  try {
    validate_rrl(L, bad_unit, l3_arrow);
    FAIL("expected UnitFails");
  } catch (const Error& e) {
    CHECK(e.code() == "UnitFails");
  }
}

TEST_CASE("derive_arrow_from_odot") {
  FiniteLattice c2 = chain(2);
  CHECK(derive_arrow_from_odot(c2, {0, 0, 0, 1}) == BinTable{1, 1, 0, 1});
  CHECK(derive_arrow_from_odot(chain(3), l3_odot) == l3_arrow);
  BinTable bad = l3_odot;
  bad[1 * 3 + 1] = 2;  // m (.) m = 1 cannot be residuated
  CHECK_THROWS_WITH_AS(derive_arrow_from_odot(chain(3), bad), doctest::Contains("NotResiduated"),
                       Error);
}

TEST_CASE("derive_odot_from_arrow") {
  FiniteLattice c2 = chain(2);
  CHECK(derive_odot_from_arrow(c2, {1, 1, 0, 1}) == BinTable{0, 0, 0, 1});
  // Godel arrow on the 3-chain gives (.) = meet
  RRLGroupoid godel = std::get<RRLGroupoid>(example("godel-3"));
  CHECK(derive_odot_from_arrow(godel.lattice, godel.arrow) == godel.lattice.meet);
  CHECK_THROWS_WITH_AS(derive_odot_from_arrow(c2, {1, 1, 1, 1}), doctest::Contains("NotResiduated"),
                       Error);
}

TEST_CASE("operations determine each other on the whole population") {
  for (const RRLGroupoid& G : fixtures::population(4)) {
    CHECK(derive_arrow_from_odot(G.lattice, G.odot) == G.arrow);
    CHECK(derive_odot_from_arrow(G.lattice, G.arrow) == G.odot);
  }
}

TEST_CASE("negation and derived implication") {
  RRLGroupoid L3 = l3();
  CHECK(negation(L3, 1) == 1);
  CHECK(derived_implication(L3) == L3.arrow);  // commutative case

  RRLGroupoid godel = std::get<RRLGroupoid>(example("godel-3"));
  CHECK(negation(godel, 1) == 0);
  CHECK(negation(godel, 0) == 2);
  BinTable imp = derived_implication(godel);
  CHECK(imp[1 * 3 + 0] == 0);  // m => 0 = 1 -> 0 = 0
  CHECK(imp[0 * 3 + 1] == 2);  // 0 => m = 0 -> 0 = 1

  for (int x = 0; x < 3; ++x) CHECK(derived_implication(L3)[x * 3 + x] == 2);
}

TEST_CASE("classify: Lukasiewicz 3-chain") {
  PropertyReport r = classify(l3());
  CHECK(r.integral);
  CHECK(r.commutative);
  CHECK(r.associative);
  CHECK(r.involutive);
  CHECK(r.condition_C);
  CHECK(r.divisibility);
  CHECK(r.lukasiewicz_type);
  CHECK(r.I0);
  CHECK(r.I1);
  CHECK(r.I2);
  CHECK(r.I3);
  CHECK(r.I3_star);
  CHECK(r.identity_D);
}

TEST_CASE("classify: Godel 3-chain") {
  PropertyReport r = classify(std::get<RRLGroupoid>(example("godel-3")));
  CHECK(r.integral);
  CHECK(r.divisibility);
  CHECK(!r.involutive);
  CHECK(!r.double_negation);
  CHECK(!r.lukasiewicz_type);
}

TEST_CASE("classify: MO2 orthocomplement groupoid is non-commutative Lukasiewicz type") {
  SectionedLattice S = std::get<SectionedLattice>(example("mo2"));
  RRLGroupoid G = groupoid_from_sectioned(S);
  PropertyReport r = classify(G);
  CHECK(r.lukasiewicz_type);
  CHECK(!r.commutative);
  CHECK(!r.associative);
  CHECK(r.involutive);
  // witness: a (.) b = b but b (.) a = a
  const FiniteLattice& L = G.lattice;
  int a = element_index(L, "a"), b = element_index(L, "b");
  CHECK(G.prod(a, b) == b);
  CHECK(G.prod(b, a) == a);
}

TEST_CASE("first lemma holds on the population") {
  for (const RRLGroupoid& G : fixtures::population(4)) {
    PropertyReport r = classify(G);
    for (int i = 0; i < 5; ++i) CHECK(r.lemma1_items[i] == Verdict::holds);
    CHECK(r.lemma1_items[5] ==
          (r.double_negation ? Verdict::holds : Verdict::not_applicable));
  }
}

TEST_CASE("second lemma holds on every involutive instance") {
  for (const RRLGroupoid& G : fixtures::population(4)) {
    PropertyReport r = classify(G);
    if (!r.involutive) continue;
    CHECK(r.I0);
    CHECK(r.I1);
    CHECK(r.I2);
    const FiniteLattice& L = G.lattice;
    BinTable imp = derived_implication(G);
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y) CHECK(L.le(x, y) == (imp[x * L.n + y] == L.top));
  }
}

TEST_CASE("biconditional equivalences never disagree") {
  for (const RRLGroupoid& G : fixtures::population(4)) {
    EquivalenceReport rep = check_biconditionals(G);
    for (const EquivalenceItem& it : rep.items) {
      INFO(it.name);
      CHECK(it.agree);
    }
  }
}

TEST_CASE("commutative integral instances with double negation: implication collapse") {
  for (const RRLGroupoid& G : fixtures::population(4)) {
    PropertyReport r = classify(G);
    if (!(r.commutative && r.integral && r.double_negation)) continue;
    const FiniteLattice& L = G.lattice;
    CHECK(derived_implication(G) == G.arrow);
    // x |-> x -> a is antitone and extensive on [a, 1]
    for (int a = 0; a < L.n; ++a)
      for (int x = 0; x < L.n; ++x) {
        if (!L.le(a, x)) continue;
        CHECK(L.le(a, G.arr(x, a)));
        CHECK(L.le(x, G.arr(G.arr(x, a), a)));
        for (int y = 0; y < L.n; ++y)
          if (L.le(a, y) && L.le(x, y)) CHECK(L.le(G.arr(y, a), G.arr(x, a)));
      }
  }
}
