#ifndef RESILAT_ENUMERATION_HPP
#define RESILAT_ENUMERATION_HPP

#include <map>

#include "resilat/basic_algebra.hpp"
#include "resilat/sections.hpp"

namespace resilat {

/// Size caps keep runs at desk scale; RESILAT_SIZE_CAP (cli) can override.
struct EnumerationCaps {
  int lattice = 7;
  int groupoid = 5;
  int basic = 5;
};

struct CensusRow {
  std::string kind;
  int size = 0;
  int total = 0;
  std::map<std::string, int> flag_counts;
};

/// All bounded lattices of order n up to isomorphism, sorted by
/// canonical form. Throws SizeCapExceeded.
std::vector<FiniteLattice> enumerate_lattices(int n, const EnumerationCaps& caps = {});

/// All antitone involutions on L.
std::vector<Involution> enumerate_involutions(const FiniteLattice& L);

/// All valid section families on L (with 1^a = a), in the given mode.
std::vector<SectionFamily> enumerate_section_families(const FiniteLattice& L, FamilyMode mode);

/// All right-residuated l-groupoids on the fixed labeled lattice L:
/// backtracking over (.) tables with unit row fixed, pruned by the
/// requirement that every {x : x (.) y <= z} has a maximum.
std::vector<RRLGroupoid> enumerate_rrl_groupoids(const FiniteLattice& L,
                                                 const EnumerationCaps& caps = {});

/// All basic algebras of order n up to isomorphism, generated through
/// lattices x sectional-involution families and deduplicated by the
/// canonical form of the ((+), ]) tables.
std::vector<BasicAlgebra> enumerate_basic_algebras(int n, const EnumerationCaps& caps = {});

/// Classifies every instance of the kind at order n and aggregates
/// counts (instances up to isomorphism). kind is one of "lattice",
/// "rrl-groupoid", "basic-algebra".
CensusRow census(const std::string& kind, int n, const EnumerationCaps& caps = {});

}  // namespace resilat

#endif
