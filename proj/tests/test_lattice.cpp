#include <doctest.h>

#include <functional>

#include "fixtures.hpp"

using namespace resilat;
using fixtures::boolean4;
using fixtures::chain;
using fixtures::n5;

namespace {

std::string thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("build_lattice on the 2-chain") {
  FiniteLattice L = build_lattice({"0", "1"}, {{"0", "1"}});
  CHECK(L.n == 2);
  CHECK(L.bottom == 0);
  CHECK(L.top == 1);
  CHECK(L.v(0, 1) == 1);
  CHECK(L.m(0, 1) == 0);
  CHECK(L.le(0, 1));
  CHECK(!L.le(1, 0));
}

TEST_CASE("build_lattice: pentagon") {
  FiniteLattice L = n5();
  CHECK(L.n == 5);
  CHECK(!is_distributive(L));
  // a \/ b = 1, a /\ b = 0, b \/ c = 1
  int a = element_index(L, "a"), b = element_index(L, "b"), c = element_index(L, "c");
  CHECK(L.v(a, b) == L.top);
  CHECK(L.m(a, b) == L.bottom);
  CHECK(L.v(b, c) == L.top);
  CHECK(L.le(a, c));
}

TEST_CASE("build_lattice failures") {
  CHECK(thrown_code([] {
          build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}});
        }) == "NoBounds");
  CHECK(thrown_code([] {
          build_lattice({"x", "y"}, {{"x", "y"}, {"y", "x"}});
        }) == "CycleError");
  CHECK(thrown_code([] {
          // three pairwise-incomparable atoms under two tops: a,b have no lub
          build_lattice_indexed({"0", "a", "b", "c", "d", "1"},
                                {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}});
        }) == "NotALattice");
  CHECK(thrown_code([] { build_lattice({"x", "x"}, {}); }) == "DuplicateName");
  CHECK(thrown_code([] { build_lattice({"x"}, {{"x", "y"}}); }) == "UnknownName");
}

TEST_CASE("lattice identities on built fixtures") {
  for (const FiniteLattice& L : {chain(4), n5(), fixtures::m3(), boolean4()}) {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y) {
        CHECK(L.v(x, y) == L.v(y, x));
        CHECK(L.m(x, L.v(x, y)) == x);  // absorption
        CHECK(L.le(x, y) == (L.v(x, y) == y));
      }
  }
}

TEST_CASE("validate_involution") {
  CHECK(validate_involution(chain(2), {1, 0}).map == UnTable{1, 0});
  // pentagon: the only antitone involution swaps the chain a < c and fixes b
  FiniteLattice L = n5();
  CHECK(validate_involution(L, {4, 3, 2, 1, 0}).map == UnTable{4, 3, 2, 1, 0});
  // swapping b and c instead fails antitonicity on a <= c
  CHECK(thrown_code([&] { validate_involution(L, {4, 1, 3, 2, 0}); }) == "NotAntitone");
  CHECK(thrown_code([&] { validate_involution(chain(3), {0, 1, 2}); }) == "NotAntitone");
  CHECK(thrown_code([&] { validate_involution(chain(3), {2, 0, 1}); }) == "NotInvolutive");
}

TEST_CASE("sections") {
  FiniteLattice L = n5();
  Section s = section(L, element_index(L, "b"));
  CHECK(s.members == std::vector<int>{element_index(L, "b"), 4});
  // a full section from the bottom reproduces the lattice
  Section all = section(L, L.bottom);
  CHECK(static_cast<int>(all.members.size()) == L.n);
}

TEST_CASE("isomorphism and canonical forms") {
  CHECK(are_isomorphic(chain(2), chain(2)).has_value());
  CHECK(!are_isomorphic(chain(4), boolean4()).has_value());
  CHECK(canonical_form(chain(4)) != canonical_form(boolean4()));

  // canonical_form(L1) == canonical_form(L2) iff isomorphic, all orders <= 5
  std::vector<FiniteLattice> all;
  for (int n = 1; n <= 5; ++n)
    for (FiniteLattice& L : enumerate_lattices(n)) all.push_back(std::move(L));
  for (const auto& L1 : all)
    for (const auto& L2 : all) {
      bool iso = L1.n == L2.n && are_isomorphic(L1, L2).has_value();
      CHECK(iso == (canonical_form(L1) == canonical_form(L2)));
    }
}
