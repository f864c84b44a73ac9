#ifndef RESILAT_LATTICE_HPP
#define RESILAT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resilat/errors.hpp"

namespace resilat {

/// Binary operation table, row-major: table[x * n + y] = f(x, y).
using BinTable = std::vector<int>;
/// Unary operation table: table[x] = f(x).
using UnTable = std::vector<int>;

/// A finite bounded lattice over named elements. Elements are dense
/// indices internally; names only matter for I/O.
struct FiniteLattice {
  std::vector<std::string> names;
  int n = 0;
  std::vector<std::uint8_t> leq;  // leq[x*n+y] != 0  iff  x <= y
  BinTable join;
  BinTable meet;
  int bottom = 0;
  int top = 0;

  bool le(int x, int y) const { return leq[x * n + y] != 0; }
  int v(int x, int y) const { return join[x * n + y]; }  // x or y
  int m(int x, int y) const { return meet[x * n + y]; }

  bool operator==(const FiniteLattice&) const = default;
};

/// An antitone involution validated against its host lattice.
struct Involution {
  UnTable map;
  int operator()(int x) const { return map[x]; }
  bool operator==(const Involution&) const = default;
};

/// The interval [base, 1] of a lattice.
struct Section {
  int base = 0;
  std::vector<int> members;  // sorted element indices with base <= x
};

/// Builds a lattice from a generating order relation (e.g. a Hasse diagram).
/// Takes the reflexive-transitive closure, verifies antisymmetry, computes
/// join/meet tables and locates the bounds.
/// Throws: CycleError, NotALattice, NoBounds, DuplicateName, UnknownName.
FiniteLattice build_lattice(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& order_pairs);

/// Same, from an index-based relation (any generating set of pairs).
FiniteLattice build_lattice_indexed(const std::vector<std::string>& elements,
                                    const std::vector<std::pair<int, int>>& order_pairs);

/// Throws NotInvolutive / NotAntitone if the map is not an order-reversing
/// involutive bijection.
Involution validate_involution(const FiniteLattice& L, const UnTable& map);

bool is_distributive(const FiniteLattice& L);

/// Complemented and distributive.
bool is_boolean(const FiniteLattice& L);

Section section(const FiniteLattice& L, int base);

/// Searches for an order-isomorphism; returns the element bijection
/// (index in L1 -> index in L2) or nullopt.
std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& L1, const FiniteLattice& L2);

/// A byte string identical for isomorphic inputs: the lexicographically
/// minimal encoding of the leq table over all permutations fixing bottom
/// and top. Extra operation tables participate in the key, so the same
/// routine dedups groupoids and basic algebras.
std::string canonical_form(const FiniteLattice& L,
                           const std::vector<const BinTable*>& binary_ops = {},
                           const std::vector<const UnTable*>& unary_ops = {});

/// Element index lookup by name; throws UnknownName.
int element_index(const FiniteLattice& L, const std::string& name);

}  // namespace resilat

#endif
