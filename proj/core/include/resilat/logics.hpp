#ifndef RESILAT_LOGICS_HPP
#define RESILAT_LOGICS_HPP

#include <optional>

#include "resilat/basic_algebra.hpp"
#include "resilat/residuation.hpp"

namespace resilat {

/// Distributive lattice with an antitone involution satisfying
/// x /\ ~x <= y \/ ~y.
struct KleeneAlgebra {
  FiniteLattice lattice;
  Involution tilde;
  bool operator==(const KleeneAlgebra&) const = default;
};

/// A Kleene algebra whose arrow x -> y = x |> (~x \/ y) exists everywhere
/// and satisfies the Nelson identity (x /\ y) -> z = x -> (y -> z).
struct NelsonAlgebra {
  KleeneAlgebra kleene;
  BinTable nelson_arrow;
  int arr(int x, int y) const { return nelson_arrow[x * kleene.lattice.n + y]; }
  bool operator==(const NelsonAlgebra&) const = default;
};

struct OrthomodularReport {
  bool orthocomplemented = false;
  bool orthomodular = false;
  std::vector<int> witness;  // failing pair, when any
};

/// Throws NotDistributive / NormalityFails (witness pair).
KleeneAlgebra check_kleene(const FiniteLattice& L, const UnTable& tilde);

/// Greatest x with a /\ x <= b, when it exists.
std::optional<int> relative_pseudocomplement(const FiniteLattice& L, int a, int b);

/// Throws MissingRelativePseudocomplement / NelsonIdentityFails.
NelsonAlgebra build_nelson(const KleeneAlgebra& K);

/// Spinks-Veroff: x => y := (x -> y) /\ (~y -> ~x),
/// x * y := ~(x -> ~y) \/ ~(y -> ~x); returns the residuated structure
/// ((.) := *, arrow := =>). Throws ConstructionInvalid.
RRLGroupoid nelson_to_residuated(const NelsonAlgebra& N);

/// x => (x => (x => y)) = x => (x => y) on the derived implication.
bool check_3_potency(const RRLGroupoid& G);

/// Stages the check: orthocomplement law first, then (OML).
/// Throws NotOrthocomplemented; reports OrthomodularFails via the flag.
OrthomodularReport check_orthomodular(const FiniteLattice& L, const UnTable& tilde);

/// x -> y := (x /\ y) \/ ~x and x (.) y := (x \/ ~y) /\ y.
/// Throws NotOrthocomplemented / OrthomodularFails.
RRLGroupoid oml_to_groupoid(const FiniteLattice& L, const UnTable& tilde);

/// (OMI): y = y (+) (x /\ y), on the basic algebra's induced lattice.
bool check_OMI(const BasicAlgebra& A);

/// (OMI*): y = (]x \/ ]y) => y, on the derived implication.
bool check_OMI_star(const RRLGroupoid& G);

}  // namespace resilat

#endif
