#include "resilat/sections.hpp"

namespace resilat {

SectionFamily validate_family(const FiniteLattice& L, const std::vector<UnTable>& maps,
                              FamilyMode mode) {
  const int n = L.n;
  if (static_cast<int>(maps.size()) != n)
    throw Error("NotIntoSection", "family must provide one map per base element");
  SectionFamily F{maps};
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(maps[a].size()) != n)
      throw Error("NotIntoSection", "map for base '" + L.names[a] + "' not total", {a});
    for (int x = 0; x < n; ++x) {
      if (!L.le(a, x)) continue;
      int fx = F.at(a, x);
      if (fx < 0 || fx >= n || !L.le(a, fx))
        throw Error("NotIntoSection",
                    "image of '" + L.names[x] + "' leaves section [" + L.names[a] + ",1]", {a, x});
    }
    if (F.at(a, L.top) != a)
      throw Error("UnitImageFails", "1^" + L.names[a] + " != " + L.names[a], {a, L.top});
    for (int x = 0; x < n; ++x) {
      if (!L.le(a, x)) continue;
      for (int y = 0; y < n; ++y)
        if (L.le(a, y) && L.le(x, y) && !L.le(F.at(a, y), F.at(a, x)))
          throw Error("NotAntitone",
                      "section [" + L.names[a] + ",1] map not antitone at ('" + L.names[x] +
                          "','" + L.names[y] + "')",
                      {a, x, y});
      int xx = F.at(a, F.at(a, x));
      if (mode == FamilyMode::involutive) {
        if (xx != x)
          throw Error("NotInvolutive", "x^aa != x at ('" + L.names[a] + "','" + L.names[x] + "')",
                      {a, x});
      } else if (!L.le(x, xx)) {
        throw Error("NotExtensive", "x^aa < x at ('" + L.names[a] + "','" + L.names[x] + "')",
                    {a, x});
      }
    }
  }
  return F;
}

BinTable implication_from_family(const FiniteLattice& L, const SectionFamily& F) {
  const int n = L.n;
  BinTable imp(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) imp[x * n + y] = F.at(y, L.v(x, y));
  return imp;
}

std::vector<IdentityCheck> check_I0_I3(const FiniteLattice& L, const BinTable& impl) {
  const int n = L.n;
  auto ii = [&](int x, int y) { return impl[x * n + y]; };
  std::vector<IdentityCheck> out;
  IdentityCheck i0{"I0", true, {}}, i1{"I1", true, {}}, i2{"I2", true, {}}, i3{"I3", true, {}};
  for (int x = 0; x < n && i0.holds; ++x) {
    if (ii(x, x) != L.top || ii(L.top, x) != x) i0 = {"I0", false, {x}};
    for (int y = 0; y < n; ++y)
      if (ii(L.v(x, y), y) != ii(x, y)) {
        i0 = {"I0", false, {x, y}};
        break;
      }
  }
  for (int x = 0; x < n && i1.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (L.m(ii(x, y), y) != y) {
        i1 = {"I1", false, {x, y}};
        break;
      }
  for (int x = 0; x < n && i2.holds; ++x)
    for (int y = 0; y < n && i2.holds; ++y) {
      if (!L.le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (!L.le(ii(y, z), ii(x, z))) {
          i2 = {"I2", false, {x, y, z}};
          break;
        }
    }
  for (int x = 0; x < n && i3.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (L.m(ii(ii(x, y), y), L.v(x, y)) != L.v(x, y)) {
        i3 = {"I3", false, {x, y}};
        break;
      }
  out.push_back(i0);
  out.push_back(i1);
  out.push_back(i2);
  out.push_back(i3);
  return out;
}

SectionFamily family_from_implication(const FiniteLattice& L, const BinTable& impl) {
  for (const auto& c : check_I0_I3(L, impl))
    if (!c.holds) throw Error("IdentityFails", "identity (" + c.name + ") fails", c.witness);
  const int n = L.n;
  std::vector<UnTable> maps(n, UnTable(n, -1));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (L.le(a, x)) maps[a][x] = impl[x * n + a];
  return validate_family(L, maps, FamilyMode::extensive);
}

RRLGroupoid groupoid_from_sectioned(const SectionedLattice& S) {
  if (!S.tilde) throw Error("PreconditionFails", "global involution required");
  const FiniteLattice& L = S.lattice;
  const Involution& t = *S.tilde;
  const int n = L.n;
  BinTable arrow(n * n, 0), odot(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) arrow[x * n + y] = S.family.at(t(x), L.v(t(x), t(y)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) odot[x * n + y] = t(arrow[y * n + t(x)]);
  return validate_rrl(L, odot, arrow);
}

SectionedLattice sectioned_from_groupoid(const RRLGroupoid& G) {
  const FiniteLattice& L = G.lattice;
  PropertyReport r = classify(G);
  if (!r.involutive) throw Error("PreconditionFails", "groupoid is not involutive");
  if (!r.I3) throw Error("PreconditionFails", "derived implication does not satisfy (I3)");
  const int n = L.n;
  UnTable neg(n);
  for (int x = 0; x < n; ++x) neg[x] = G.neg(x);
  BinTable imp = derived_implication(G);
  std::vector<UnTable> maps(n, UnTable(n, -1));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (L.le(a, x)) maps[a][x] = imp[x * n + a];
  return SectionedLattice{L, validate_involution(L, neg),
                          validate_family(L, maps, FamilyMode::extensive)};
}

RRLGroupoid groupoid_from_sectional_involutions(const FiniteLattice& L, const SectionFamily& F) {
  validate_family(L, F.maps, FamilyMode::involutive);
  UnTable neg(L.n);
  for (int x = 0; x < L.n; ++x) neg[x] = F.at(L.bottom, x);
  SectionedLattice S{L, validate_involution(L, neg), F};
  return groupoid_from_sectioned(S);
}

SectionedLattice sectional_involutions_from_groupoid(const RRLGroupoid& G) {
  PropertyReport r = classify(G);
  if (!r.integral) throw Error("PreconditionFails", "groupoid is not integral");
  if (!r.involutive) throw Error("PreconditionFails", "groupoid is not involutive");
  if (!r.I3_star) throw Error("PreconditionFails", "derived implication does not satisfy (I3*)");
  const FiniteLattice& L = G.lattice;
  const int n = L.n;
  BinTable imp = derived_implication(G);
  std::vector<UnTable> maps(n, UnTable(n, -1));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (L.le(a, x)) maps[a][x] = imp[x * n + a];
  UnTable neg(n);
  for (int x = 0; x < n; ++x) neg[x] = G.neg(x);
  return SectionedLattice{L, validate_involution(L, neg),
                          validate_family(L, maps, FamilyMode::involutive)};
}

SectionFamily sectional_pseudocomplement_family(const FiniteLattice& L) {
  const int n = L.n;
  std::vector<UnTable> maps(n, UnTable(n, -1));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      if (!L.le(a, x)) continue;
      int best = -1;
      for (int y = 0; y < n; ++y)
        if (L.le(a, y) && L.m(x, y) == a) best = best < 0 ? y : L.v(best, y);
      // best is the join of all candidates; it qualifies only if itself
      // a candidate, which is exactly when the pseudocomplement exists
      if (best < 0 || L.m(x, best) != a)
        throw Error("NotSectionallyPseudocomplemented",
                    "no pseudocomplement of '" + L.names[x] + "' in [" + L.names[a] + ",1]",
                    {a, x});
      maps[a][x] = best;
    }
  return validate_family(L, maps, FamilyMode::extensive);
}

bool is_sectionally_pseudocomplemented(const FiniteLattice& L) {
  try {
    sectional_pseudocomplement_family(L);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<IdentityCheck> check_P1_P4(const FiniteLattice& L, const BinTable& impl) {
  const int n = L.n;
  auto ii = [&](int x, int y) { return impl[x * n + y]; };
  std::vector<IdentityCheck> out;
  IdentityCheck p1{"P1", true, {}}, p2{"P2", true, {}}, p3{"P3", true, {}}, p4{"P4", true, {}};
  for (int x = 0; x < n; ++x)
    if (ii(x, x) != L.top || ii(L.top, x) != x) {
      p1 = {"P1", false, {x}};
      break;
    }
  for (int x = 0; x < n && p2.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (ii(L.v(x, y), y) != ii(x, y) || L.m(y, ii(x, y)) != y) {
        p2 = {"P2", false, {x, y}};
        break;
      }
  for (int x = 0; x < n && p3.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (L.m(ii(ii(x, y), y), L.v(x, y)) != L.v(x, y)) {
        p3 = {"P3", false, {x, y}};
        break;
      }
  // (P4) as printed, left-to-right:
  // ([(x\/z) /\ (y\/z)] => z) /\ ([(x\/z) /\ (y=>z)] => z) = x /\ z
  for (int x = 0; x < n && p4.holds; ++x)
    for (int y = 0; y < n && p4.holds; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = L.m(ii(L.m(L.v(x, z), L.v(y, z)), z), ii(L.m(L.v(x, z), ii(y, z)), z));
        if (lhs != L.m(x, z)) {
          p4 = {"P4", false, {x, y, z}};
          break;
        }
      }
  out.push_back(p1);
  out.push_back(p2);
  out.push_back(p3);
  out.push_back(p4);
  return out;
}

EquivalenceItem check_prop3(const RRLGroupoid& G) {
  PropertyReport r = classify(G);
  if (!r.involutive) return EquivalenceItem{"Prop3", {Verdict::not_applicable, Verdict::not_applicable}, true, {}};
  const FiniteLattice& L = G.lattice;
  BinTable imp = derived_implication(G);
  auto checks = check_P1_P4(L, imp);
  bool left = checks[2].holds && checks[3].holds;  // (P3) and (P4)

  bool right = false;
  try {
    SectionFamily pc = sectional_pseudocomplement_family(L);
    right = true;
    for (int y = 0; y < L.n && right; ++y)
      for (int x = 0; x < L.n; ++x)
        if (L.le(y, x) && imp[x * L.n + y] != pc.at(y, x)) {
          right = false;
          break;
        }
  } catch (const Error&) {
    right = false;
  }
  EquivalenceItem it{"Prop3", {left ? Verdict::holds : Verdict::fails,
                               right ? Verdict::holds : Verdict::fails},
                     left == right, {}};
  return it;
}

EquivalenceItem check_boolean_integral(const RRLGroupoid& G) {
  PropertyReport r = classify(G);
  // The claim covers groupoids built from a sectional-pseudocomplement
  // family: the derived implication must consist of those pseudocomplements.
  bool applicable = r.involutive;
  if (applicable) {
    try {
      const FiniteLattice& L = G.lattice;
      SectionFamily pc = sectional_pseudocomplement_family(L);
      BinTable imp = derived_implication(G);
      for (int y = 0; y < L.n && applicable; ++y)
        for (int x = 0; x < L.n; ++x)
          if (L.le(y, x) && imp[x * L.n + y] != pc.at(y, x)) {
            applicable = false;
            break;
          }
    } catch (const Error&) {
      applicable = false;
    }
  }
  if (!applicable)
    return EquivalenceItem{"BooleanIntegral",
                           {Verdict::not_applicable, Verdict::not_applicable}, true, {}};
  bool left = r.integral;
  bool right = is_boolean(G.lattice);
  return EquivalenceItem{"BooleanIntegral",
                         {left ? Verdict::holds : Verdict::fails,
                          right ? Verdict::holds : Verdict::fails},
                         left == right, {}};
}

}  // namespace resilat
