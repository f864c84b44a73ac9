#ifndef RESILAT_BASIC_ALGEBRA_HPP
#define RESILAT_BASIC_ALGEBRA_HPP

#include "resilat/residuation.hpp"
#include "resilat/sections.hpp"

namespace resilat {

/// (A, (+), ], 0) satisfying (BA1)-(BA4), with 1 := ]0 always derived.
struct BasicAlgebra {
  std::vector<std::string> names;
  int n = 0;
  BinTable oplus;
  UnTable neg_table;
  int zero = 0;

  int plus(int x, int y) const { return oplus[x * n + y]; }
  int neg(int x) const { return neg_table[x]; }
  int one() const { return neg(zero); }

  bool operator==(const BasicAlgebra&) const = default;
};

/// (A, =>, 0) with 1 := 0 => 0; enough to rebuild the basic algebra.
struct ImplicationReduct {
  std::vector<std::string> names;
  int n = 0;
  BinTable imp;
  int zero = 0;
  int at(int x, int y) const { return imp[x * n + y]; }
  int one() const { return at(zero, zero); }
  bool operator==(const ImplicationReduct&) const = default;
};

struct Remark4Report {
  bool oplus_associative = false;
  bool odot_associative = false;
  bool associativity_agrees = false;
  bool oplus_commutative = false;
  bool odot_commutative = false;
  bool commutativity_agrees = false;
};

/// Throws AxiomFails(BA1|BA2|BA3|BA4) with witness.
BasicAlgebra validate_basic(const std::vector<std::string>& elements, const BinTable& oplus,
                            const UnTable& neg, int zero);

/// Lattice from the derived order x <= y iff ]x (+) y = 1; join/meet are
/// verified against the displayed formulas. Throws InternalInconsistency.
FiniteLattice induced_lattice(const BasicAlgebra& A);

/// x (+) y := (x^0 \/ y)^y, ]x := x^0 (family in involutive mode).
BasicAlgebra basic_from_sectioned(const SectionedLattice& S);

/// x^a := ]x (+) a over the induced lattice.
SectionedLattice sectioned_from_basic(const BasicAlgebra& A);

/// x (.) y := ](]x (+) ]y), x -> y := y (+) ]x; Lukasiewicz type.
RRLGroupoid groupoid_from_basic(const BasicAlgebra& A);

/// ]x := x -> 0, x (+) y := ](]x (.) ]y); requires Lukasiewicz type.
/// Throws NotLukasiewiczType.
BasicAlgebra basic_from_groupoid(const RRLGroupoid& G);

Remark4Report check_remark4(const BasicAlgebra& A);

/// (+) associative, i.e. the algebra is an MV-algebra.
bool is_mv(const BasicAlgebra& A);

/// x => y := ]x (+) y.
ImplicationReduct implication_reduct(const BasicAlgebra& A);

/// Identities (I0*), (I1*), (L), (I4), (I5).
std::vector<IdentityCheck> check_reduct_identities(const ImplicationReduct& R);

/// Lattice from x <= y iff x => y = 1, join (x => y) => y, meet via
/// ]x := x => 0. Requires the identities to hold.
FiniteLattice reduct_order(const ImplicationReduct& R);

/// ]x := x => 0 and x (+) y := ]x => y; the result's own implication
/// reduct equals R. Throws IdentityFails / NotReconstructible.
BasicAlgebra basic_from_reduct(const ImplicationReduct& R);

/// The n-element Lukasiewicz chain: e_i (+) e_j = e_min(i+j, n-1),
/// ]e_i = e_(n-1-i). Throws InvalidSize for n < 2.
BasicAlgebra mv_chain(int n);

}  // namespace resilat

#endif
