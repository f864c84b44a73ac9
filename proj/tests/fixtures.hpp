// Shared fixtures: small lattices and the groupoid corpus the suites
// quantify over.
#ifndef RESILAT_TESTS_FIXTURES_HPP
#define RESILAT_TESTS_FIXTURES_HPP

#include "resilat/enumeration.hpp"
#include "resilat/examples.hpp"
#include "resilat/logics.hpp"

namespace fixtures {

using namespace resilat;

inline FiniteLattice chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    if (i) pairs.emplace_back(i - 1, i);
  }
  return build_lattice_indexed(names, pairs);
}

inline FiniteLattice n5() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

inline FiniteLattice m3() {
  return build_lattice_indexed({"0", "a", "b", "c", "1"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline FiniteLattice boolean4() {
  return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline RRLGroupoid l3() { return groupoid_from_basic(mv_chain(3)); }

// every built-in viewed as a groupoid where a construction exists
inline std::vector<RRLGroupoid> corpus_groupoids() {
  std::vector<RRLGroupoid> out;
  for (const char* name : {"c2", "godel-3", "boolean-4"})
    out.push_back(std::get<RRLGroupoid>(example(name)));
  for (const char* name : {"lukasiewicz-3", "lukasiewicz-4"})
    out.push_back(groupoid_from_basic(std::get<BasicAlgebra>(example(name))));
  for (const char* name : {"mo2", "n5-involution"})
    out.push_back(groupoid_from_sectioned(std::get<SectionedLattice>(example(name))));
  out.push_back(nelson_to_residuated(std::get<NelsonAlgebra>(example("nelson-3"))));
  return out;
}

inline std::vector<RRLGroupoid> enumerated_groupoids(int max_order) {
  std::vector<RRLGroupoid> out;
  for (int n = 1; n <= max_order; ++n)
    for (const FiniteLattice& L : enumerate_lattices(n))
      for (RRLGroupoid& G : enumerate_rrl_groupoids(L)) out.push_back(std::move(G));
  return out;
}

inline std::vector<RRLGroupoid> population(int max_order) {
  std::vector<RRLGroupoid> out = corpus_groupoids();
  for (RRLGroupoid& G : enumerated_groupoids(max_order)) out.push_back(std::move(G));
  return out;
}

}  // namespace fixtures

#endif
