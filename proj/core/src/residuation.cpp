#include "resilat/residuation.hpp"

namespace resilat {

RRLGroupoid validate_rrl(const FiniteLattice& L, const BinTable& odot, const BinTable& arrow) {
  const int n = L.n;
  if (static_cast<int>(odot.size()) != n * n || static_cast<int>(arrow.size()) != n * n)
    throw Error("UnitFails", "operation tables not total on the carrier");
  RRLGroupoid G{L, odot, arrow};
  for (int x = 0; x < n; ++x)
    if (G.prod(L.top, x) != x)
      throw Error("UnitFails", "1 (.) '" + L.names[x] + "' != '" + L.names[x] + "'", {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.le(G.prod(x, y), z) != L.le(x, G.arr(y, z)))
          throw Error("AdjointnessFails",
                      "x (.) y <= z  iff  x <= y -> z fails at ('" + L.names[x] + "','" +
                          L.names[y] + "','" + L.names[z] + "')",
                      {x, y, z});
  return G;
}

BinTable derive_arrow_from_odot(const FiniteLattice& L, const BinTable& odot) {
  const int n = L.n;
  BinTable arrow(n * n, 0);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      int acc = -1;
      for (int x = 0; x < n; ++x)
        if (L.le(odot[x * n + y], z)) acc = acc < 0 ? x : L.v(acc, x);
      if (acc < 0)
        throw Error("NotResiduated", "no x with x (.) '" + L.names[y] + "' <= '" + L.names[z] + "'",
                    {y, z});
      arrow[y * n + z] = acc;
    }
  try {
    validate_rrl(L, odot, arrow);
  } catch (const Error& e) {
    throw Error("NotResiduated", std::string("candidate arrow fails: ") + e.what(), e.witness());
  }
  return arrow;
}

BinTable derive_odot_from_arrow(const FiniteLattice& L, const BinTable& arrow) {
  const int n = L.n;
  BinTable odot(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int acc = -1;
      for (int z = 0; z < n; ++z)
        if (L.le(x, arrow[y * n + z])) acc = acc < 0 ? z : L.m(acc, z);
      if (acc < 0)
        throw Error("NotResiduated", "no z with '" + L.names[x] + "' <= '" + L.names[y] + "' -> z",
                    {x, y});
      odot[x * n + y] = acc;
    }
  try {
    validate_rrl(L, odot, arrow);
  } catch (const Error& e) {
    throw Error("NotResiduated", std::string("candidate product fails: ") + e.what(), e.witness());
  }
  return odot;
}

int negation(const RRLGroupoid& G, int x) { return G.neg(x); }

BinTable derived_implication(const RRLGroupoid& G) {
  const int n = G.lattice.n;
  BinTable imp(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) imp[x * n + y] = G.arr(G.neg(y), G.neg(x));
  return imp;
}

namespace {

struct Flags {
  const RRLGroupoid& G;
  const FiniteLattice& L;
  BinTable imp;
  explicit Flags(const RRLGroupoid& g) : G(g), L(g.lattice), imp(derived_implication(g)) {}
  int ii(int x, int y) const { return imp[x * L.n + y]; }

  bool integral() const {
    for (int x = 0; x < L.n; ++x)
      if (G.prod(x, L.top) != x) return false;
    return true;
  }
  bool commutative() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (G.prod(x, y) != G.prod(y, x)) return false;
    return true;
  }
  bool associative() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        for (int z = 0; z < L.n; ++z)
          if (G.prod(G.prod(x, y), z) != G.prod(x, G.prod(y, z))) return false;
    return true;
  }
  bool double_negation() const {
    for (int x = 0; x < L.n; ++x)
      if (G.neg(G.neg(x)) != x) return false;
    return true;
  }
  bool involutive() const {
    if (!double_negation()) return false;
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (L.le(x, y) && !L.le(G.neg(y), G.neg(x))) return false;
    return true;
  }
  bool condition_C() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        for (int z = 0; z < L.n; ++z)
          if (L.le(z, G.prod(x, y)) != L.le(G.arr(y, G.neg(x)), G.neg(z))) return false;
    return true;
  }
  bool divisibility() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (G.prod(G.arr(x, y), x) != L.m(x, y)) return false;
    return true;
  }
  // x (.) y = ](y -> ]x), the product formula from Proposition 1
  bool neg_formula() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (G.prod(x, y) != G.neg(G.arr(y, G.neg(x)))) return false;
    return true;
  }
  bool I0() const {
    for (int x = 0; x < L.n; ++x) {
      if (ii(x, x) != L.top || ii(L.top, x) != x) return false;
      for (int y = 0; y < L.n; ++y)
        if (ii(L.v(x, y), y) != ii(x, y)) return false;
    }
    return true;
  }
  bool I1() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (L.m(ii(x, y), y) != y) return false;
    return true;
  }
  bool I2() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (L.le(x, y))
          for (int z = 0; z < L.n; ++z)
            if (!L.le(ii(y, z), ii(x, z))) return false;
    return true;
  }
  bool I3() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (L.m(ii(ii(x, y), y), L.v(x, y)) != L.v(x, y)) return false;
    return true;
  }
  bool I3_star() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (ii(ii(x, y), y) != L.v(x, y)) return false;
    return true;
  }
  bool identity_D() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        for (int z = 0; z < L.n; ++z)
          if (ii(G.prod(x, y), z) != ii(x, ii(y, z))) return false;
    return true;
  }
  bool lukasiewicz_identity() const {
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y)
        if (ii(ii(x, y), y) != ii(ii(y, x), x)) return false;
    return true;
  }
  bool imp_equals_arrow() const { return imp == G.arrow; }
  bool imp0_equals_neg() const {
    for (int x = 0; x < L.n; ++x)
      if (ii(x, L.bottom) != G.neg(x)) return false;
    return true;
  }
};

Verdict v(bool b) { return b ? Verdict::holds : Verdict::fails; }

}  // namespace

PropertyReport classify(const RRLGroupoid& G) {
  Flags f(G);
  const FiniteLattice& L = G.lattice;
  PropertyReport r;
  r.integral = f.integral();
  r.commutative = f.commutative();
  r.associative = f.associative();
  r.double_negation = f.double_negation();
  r.involutive = f.involutive();
  r.condition_C = f.condition_C();
  r.divisibility = f.divisibility();
  r.I0 = f.I0();
  r.I1 = f.I1();
  r.I2 = f.I2();
  r.I3 = f.I3();
  r.I3_star = f.I3_star();
  r.identity_D = f.identity_D();
  r.lukasiewicz_identity = f.lukasiewicz_identity();
  r.lukasiewicz_type = r.integral && r.involutive && r.lukasiewicz_identity;

  // Lemma 1
  bool i1 = G.neg(L.bottom) == L.top;
  bool i2 = true, i3 = true, i4 = true, i5 = true;
  for (int a = 0; a < L.n; ++a) {
    i3 = i3 && G.prod(a, L.bottom) == L.bottom && G.prod(L.bottom, a) == L.bottom;
    for (int b = 0; b < L.n; ++b) {
      i2 = i2 && (L.le(a, b) == (G.arr(a, b) == L.top));
      i5 = i5 && L.le(G.prod(a, b), b);
      for (int c = 0; c < L.n; ++c) {
        if (L.le(b, c)) i4 = i4 && L.le(G.prod(b, a), G.prod(c, a)) && L.le(G.arr(a, b), G.arr(a, c));
        i5 = i5 && G.arr(b, c) == G.arr(b, L.m(b, c));
      }
    }
  }
  r.lemma1_items = {v(i1), v(i2), v(i3), v(i4), v(i5),
                    r.double_negation ? v(G.neg(L.top) == L.bottom) : Verdict::not_applicable};
  return r;
}

EquivalenceReport check_biconditionals(const RRLGroupoid& G) {
  Flags f(G);
  EquivalenceReport rep;

  auto chain = [&rep](std::string name, std::vector<Verdict> sides) {
    EquivalenceItem it{std::move(name), std::move(sides), true, {}};
    bool any_na = false;
    for (Verdict s : it.sides) any_na = any_na || s == Verdict::not_applicable;
    if (!any_na)
      for (Verdict s : it.sides) it.agree = it.agree && s == it.sides.front();
    rep.items.push_back(std::move(it));
  };

  const bool inv = f.involutive();
  const bool nf = f.neg_formula();
  const bool dn = f.double_negation();
  const bool cc = f.condition_C();
  const Verdict na = Verdict::not_applicable;

  // Proposition 1: (DN and C)  iff  (involutive and x(.)y = ](y -> ]x))
  chain("P1", {v(dn && cc), v(inv && nf)});

  // Corollary 1 (involutive): I3  iff  product formula  iff  C
  if (inv)
    chain("C1", {v(f.I3()), v(nf), v(cc)});
  else
    chain("C1", {na, na, na});

  // Theorem 2 (involutive with the product formula)
  if (inv && nf) {
    chain("T2.integral", {v(f.integral()), v(f.imp0_equals_neg())});
    chain("T2.commutative", {v(f.commutative()), v(f.imp_equals_arrow())});
    chain("T2.associative", {v(f.associative()), v(f.identity_D())});
  } else {
    chain("T2.integral", {na, na});
    chain("T2.commutative", {na, na});
    chain("T2.associative", {na, na});
  }

  // Corollary 2 (involutive + I3): associative implies commutative and integral
  {
    EquivalenceItem it{"C2", {}, true, {}};
    if (inv && f.I3()) {
      bool assoc = f.associative();
      it.sides = {v(assoc), v(f.commutative() && f.integral())};
      it.agree = !assoc || (f.commutative() && f.integral());
    } else {
      it.sides = {na, na};
    }
    rep.items.push_back(std::move(it));
  }

  // Proposition 4: (Luk. identity and involutive)  iff  (I3* and involutive)
  // iff  (DN and divisibility and C)
  chain("P4", {v(f.lukasiewicz_identity() && inv), v(f.I3_star() && inv),
               v(dn && f.divisibility() && cc)});
  return rep;
}

}  // namespace resilat
