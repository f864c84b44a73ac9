#ifndef RESILAT_IO_HPP
#define RESILAT_IO_HPP

#include <variant>

#include "resilat/basic_algebra.hpp"
#include "resilat/logics.hpp"
#include "resilat/sections.hpp"

namespace resilat {

/// A plain bounded lattice file, optionally carrying a "neg" involution
/// table (used e.g. for ortholattice fixtures).
struct LatticeStructure {
  FiniteLattice lattice;
  std::optional<Involution> neg;
  bool operator==(const LatticeStructure&) const = default;
};

using Structure = std::variant<LatticeStructure, SectionedLattice, RRLGroupoid, BasicAlgebra,
                               ImplicationReduct, KleeneAlgebra, NelsonAlgebra>;

/// File kind tags: lattice, sectioned-lattice, rrl-groupoid,
/// basic-algebra, implication-reduct, kleene, nelson.
std::string kind_of(const Structure& s);

/// Parses and fully validates an algebra file. Tables are nested arrays
/// of element names (row index = left argument); unary tables are flat
/// arrays. Throws ParseError / UnknownKind / the structure's own
/// validation errors.
Structure parse_algebra(const std::string& json_text);

/// Serializes to the same format; output is byte-stable for equal inputs
/// and satisfies serialize . parse = id.
std::string serialize_algebra(const Structure& s);

}  // namespace resilat

#endif
