#ifndef RESILAT_SECTIONS_HPP
#define RESILAT_SECTIONS_HPP

#include <optional>

#include "resilat/residuation.hpp"

namespace resilat {

enum class FamilyMode { extensive, involutive };

/// Per-section unary maps x |-> x^a on each interval [a, 1].
/// maps[a][x] is defined only for a <= x; other cells hold -1.
struct SectionFamily {
  std::vector<UnTable> maps;
  int at(int a, int x) const { return maps[a][x]; }
  bool operator==(const SectionFamily&) const = default;
};

/// A lattice carrying a section family and, optionally, a global
/// antitone involution ~.
struct SectionedLattice {
  FiniteLattice lattice;
  std::optional<Involution> tilde;
  SectionFamily family;
  bool operator==(const SectionedLattice&) const = default;
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::vector<int> witness;
};

/// Validates that each map sends [a,1] into itself, is antitone and
/// extensive (involutive mode: x^aa = x), and that 1^a = a.
/// Throws NotIntoSection / NotAntitone / NotExtensive / NotInvolutive /
/// UnitImageFails with witness (a, x).
SectionFamily validate_family(const FiniteLattice& L, const std::vector<UnTable>& maps,
                              FamilyMode mode);

/// x => y := (x \/ y)^y.
BinTable implication_from_family(const FiniteLattice& L, const SectionFamily& F);

/// Defines x^a := x => a on x >= a, after verifying (I0)-(I3) on impl.
/// Throws IdentityFails with the violated identity's name and witness.
SectionFamily family_from_implication(const FiniteLattice& L, const BinTable& impl);

/// The section-to-groupoid transform: x -> y := (~x \/ ~y)^~x and
/// x (.) y := ~(y -> ~x). Requires the global involution.
RRLGroupoid groupoid_from_sectioned(const SectionedLattice& S);

/// Inverse transform: requires G involutive with (I3); tilde := (x -> 0),
/// x^a := x => a. Throws PreconditionFails.
SectionedLattice sectioned_from_groupoid(const RRLGroupoid& G);

/// Specialization to sectionally antitone involutions: ~x := x^0, same
/// formulas; the output is integral. Family must be in involutive mode.
RRLGroupoid groupoid_from_sectional_involutions(const FiniteLattice& L, const SectionFamily& F);

/// Inverse: requires G integral, involutive, with (I3*). The returned
/// SectionedLattice carries tilde = (x -> 0) = x^0.
SectionedLattice sectional_involutions_from_groupoid(const RRLGroupoid& G);

/// x^a := greatest y in [a,1] with y /\ x = a.
/// Throws NotSectionallyPseudocomplemented with witness (a, x).
SectionFamily sectional_pseudocomplement_family(const FiniteLattice& L);

bool is_sectionally_pseudocomplemented(const FiniteLattice& L);

/// Evaluates identities (P1)-(P4) verbatim for a candidate implication.
std::vector<IdentityCheck> check_P1_P4(const FiniteLattice& L, const BinTable& impl);

/// Evaluates identities (I0)-(I3) for a candidate implication.
std::vector<IdentityCheck> check_I0_I3(const FiniteLattice& L, const BinTable& impl);

/// Proposition 3 as a biconditional: derived implication satisfies (P3)
/// and (P4)  iff  the lattice is sectionally pseudocomplemented and, for
/// x >= y, x => y is the pseudocomplement of x in [y,1].
/// Hypothesis: G involutive (not-applicable otherwise).
EquivalenceItem check_prop3(const RRLGroupoid& G);

/// For groupoids built from a sectional-pseudocomplement family with an
/// involution: integral  iff  the underlying lattice is Boolean.
EquivalenceItem check_boolean_integral(const RRLGroupoid& G);

}  // namespace resilat

#endif
