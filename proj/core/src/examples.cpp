#include "resilat/examples.hpp"

#include <algorithm>

namespace resilat {

namespace {

RRLGroupoid meet_groupoid(const FiniteLattice& L) {
  BinTable odot = L.meet;
  return validate_rrl(L, odot, derive_arrow_from_odot(L, odot));
}

BasicAlgebra lukasiewicz_chain(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  BinTable oplus(n * n, 0);
  UnTable neg(n, 0);
  for (int i = 0; i < n; ++i) {
    neg[i] = n - 1 - i;
    for (int j = 0; j < n; ++j) oplus[i * n + j] = std::min(i + j, n - 1);
  }
  return validate_basic(names, oplus, neg, 0);
}

SectionedLattice n5_involution() {
  FiniteLattice L = build_lattice({"0", "a", "b", "c", "1"},
                                  {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
  Involution tilde = validate_involution(L, {4, 3, 2, 1, 0});  // 0<->1, a<->c, b fixed
  return SectionedLattice{L, tilde, sectional_pseudocomplement_family(L)};
}

SectionedLattice mo2() {
  FiniteLattice L =
      build_lattice({"0", "a", "a'", "b", "b'", "1"},
                    {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
                     {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}});
  UnTable t = {5, 2, 1, 4, 3, 0};  // orthocomplement: 0<->1 and each atom pair swapped
  Involution tilde = validate_involution(L, t);
  std::vector<UnTable> maps(L.n, UnTable(L.n, -1));
  for (int a = 0; a < L.n; ++a)
    for (int x = 0; x < L.n; ++x)
      if (L.le(a, x)) maps[a][x] = L.v(tilde(x), a);  // x^a := ~x \/ a
  return SectionedLattice{L, tilde, validate_family(L, maps, FamilyMode::extensive)};
}

LatticeStructure o6() {
  FiniteLattice L = build_lattice({"0", "a", "b", "c", "d", "1"},
                                  {{"0", "a"}, {"a", "b"}, {"b", "1"},
                                   {"0", "c"}, {"c", "d"}, {"d", "1"}});
  // orthocomplement of the hexagon: a <-> d, b <-> c
  return LatticeStructure{L, validate_involution(L, {5, 4, 3, 2, 1, 0})};
}

NelsonAlgebra nelson3() {
  FiniteLattice L = build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});
  return build_nelson(check_kleene(L, {2, 1, 0}));
}

}  // namespace

std::vector<std::string> example_names() {
  return {"boolean-4", "c2",  "godel-3",       "lukasiewicz-3", "lukasiewicz-4",
          "mo2",       "n5-involution", "nelson-3", "o6"};
}

Structure example(const std::string& name) {
  if (name == "c2") return meet_groupoid(build_lattice({"0", "1"}, {{"0", "1"}}));
  if (name == "godel-3")
    return meet_groupoid(build_lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}));
  if (name == "boolean-4")
    return meet_groupoid(
        build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  if (name == "lukasiewicz-3") return lukasiewicz_chain({"0", "m", "1"});
  if (name == "lukasiewicz-4") return lukasiewicz_chain({"0", "a", "b", "1"});
  if (name == "n5-involution") return n5_involution();
  if (name == "mo2") return mo2();
  if (name == "o6") return o6();
  if (name == "nelson-3") return nelson3();
  throw Error("UnknownExample", "no built-in named '" + name + "'");
}

}  // namespace resilat
