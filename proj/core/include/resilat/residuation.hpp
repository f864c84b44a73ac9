#ifndef RESILAT_RESIDUATION_HPP
#define RESILAT_RESIDUATION_HPP

#include <array>
#include <string>
#include <vector>

#include "resilat/lattice.hpp"

namespace resilat {

/// A right-residuated l-groupoid as validated tables: 1 (.) x = x and
/// x (.) y <= z  iff  x <= y -> z.
struct RRLGroupoid {
  FiniteLattice lattice;
  BinTable odot;
  BinTable arrow;

  int prod(int x, int y) const { return odot[x * lattice.n + y]; }
  int arr(int x, int y) const { return arrow[x * lattice.n + y]; }
  int neg(int x) const { return arr(x, lattice.bottom); }

  bool operator==(const RRLGroupoid&) const = default;
};

/// Exhaustive truth values of the named identities on one finite instance.
struct PropertyReport {
  bool integral = false;       // 1 (.) x = x (.) 1 = x
  bool commutative = false;
  bool associative = false;
  bool double_negation = false;  // ]]x = x
  bool involutive = false;       // double negation + antitone
  bool condition_C = false;      // z <= x(.)y  iff  y -> ]x <= ]z
  bool divisibility = false;     // (x -> y) (.) x = x /\ y
  bool I0 = false;
  bool I1 = false;
  bool I2 = false;
  bool I3 = false;
  bool I3_star = false;
  bool identity_D = false;       // (x(.)y) => z = x => (y => z)
  bool lukasiewicz_identity = false;  // (x=>y)=>y = (y=>x)=>x
  bool lukasiewicz_type = false;      // integral + involutive + the above
  std::array<Verdict, 6> lemma1_items{};  // (vi) is n/a without double negation
};

/// One verified biconditional (or chain of equivalent assertions): each
/// side's verdict plus whether the theorem's claim holds on this instance.
struct EquivalenceItem {
  std::string name;
  std::vector<Verdict> sides;
  bool agree = true;            // false only on a genuine disagreement
  std::vector<int> witness;     // empty when agree
};

struct EquivalenceReport {
  std::vector<EquivalenceItem> items;
  bool all_agree() const {
    for (const auto& it : items)
      if (!it.agree) return false;
    return true;
  }
};

/// Throws UnitFails / AdjointnessFails (with witness triple).
RRLGroupoid validate_rrl(const FiniteLattice& L, const BinTable& odot, const BinTable& arrow);

/// y -> z := \/ { x : x (.) y <= z }; throws NotResiduated if the result
/// does not pass validate_rrl.
BinTable derive_arrow_from_odot(const FiniteLattice& L, const BinTable& odot);

/// x (.) y := /\ { z : x <= y -> z }; throws NotResiduated.
BinTable derive_odot_from_arrow(const FiniteLattice& L, const BinTable& arrow);

/// ]x := x -> 0.
int negation(const RRLGroupoid& G, int x);

/// x => y := ]y -> ]x, tabulated over all pairs.
BinTable derived_implication(const RRLGroupoid& G);

PropertyReport classify(const RRLGroupoid& G);

/// Evaluates both sides of each of the paper's equivalences independently
/// (Proposition 1, Corollary 1, Theorem 2, Corollary 2, Proposition 4);
/// any disagreement signals an implementation bug.
EquivalenceReport check_biconditionals(const RRLGroupoid& G);

}  // namespace resilat

#endif
