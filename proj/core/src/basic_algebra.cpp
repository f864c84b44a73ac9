#include "resilat/basic_algebra.hpp"

namespace resilat {

BasicAlgebra validate_basic(const std::vector<std::string>& elements, const BinTable& oplus,
                            const UnTable& neg, int zero) {
  BasicAlgebra A;
  A.names = elements;
  A.n = static_cast<int>(elements.size());
  A.oplus = oplus;
  A.neg_table = neg;
  A.zero = zero;
  const int n = A.n;
  if (static_cast<int>(oplus.size()) != n * n || static_cast<int>(neg.size()) != n)
    throw Error("AxiomFails", "operation tables not total");
  for (int x = 0; x < n; ++x) {
    if (A.plus(x, zero) != x)
      throw Error("AxiomFails", "(BA1) x (+) 0 != x at '" + elements[x] + "'", {x});
    if (A.neg(A.neg(x)) != x)
      throw Error("AxiomFails", "(BA2) ]]x != x at '" + elements[x] + "'", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (A.plus(A.neg(A.plus(A.neg(x), y)), y) != A.plus(A.neg(A.plus(A.neg(y), x)), x))
        throw Error("AxiomFails", "(BA3) fails at ('" + elements[x] + "','" + elements[y] + "')",
                    {x, y});
  const int one = A.one();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = A.plus(A.neg(A.plus(A.neg(A.plus(A.neg(A.plus(x, y)), y)), z)), A.plus(x, z));
        if (lhs != one)
          throw Error("AxiomFails",
                      "(BA4) fails at ('" + elements[x] + "','" + elements[y] + "','" +
                          elements[z] + "')",
                      {x, y, z});
      }
  return A;
}

FiniteLattice induced_lattice(const BasicAlgebra& A) {
  const int n = A.n;
  const int one = A.one();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (A.plus(A.neg(x), y) == one) pairs.emplace_back(x, y);
  FiniteLattice L;
  try {
    L = build_lattice_indexed(A.names, pairs);
  } catch (const Error& e) {
    throw Error("InternalInconsistency", std::string("derived order is not a lattice: ") + e.what());
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int jf = A.plus(A.neg(A.plus(A.neg(x), y)), y);
      int mf = A.neg(L.v(A.neg(x), A.neg(y)));
      if (L.v(x, y) != jf || L.m(x, y) != mf)
        throw Error("InternalInconsistency", "join/meet formulas disagree with derived order",
                    {x, y});
    }
  return L;
}

BasicAlgebra basic_from_sectioned(const SectionedLattice& S) {
  const FiniteLattice& L = S.lattice;
  validate_family(L, S.family.maps, FamilyMode::involutive);
  const int n = L.n;
  BinTable oplus(n * n, 0);
  UnTable neg(n);
  for (int x = 0; x < n; ++x) neg[x] = S.family.at(L.bottom, x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) oplus[x * n + y] = S.family.at(y, L.v(neg[x], y));
  return validate_basic(L.names, oplus, neg, L.bottom);
}

SectionedLattice sectioned_from_basic(const BasicAlgebra& A) {
  FiniteLattice L = induced_lattice(A);
  const int n = A.n;
  std::vector<UnTable> maps(n, UnTable(n, -1));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (L.le(a, x)) maps[a][x] = A.plus(A.neg(x), a);
  UnTable neg(n);
  for (int x = 0; x < n; ++x) neg[x] = A.neg(x);
  return SectionedLattice{L, validate_involution(L, neg),
                          validate_family(L, maps, FamilyMode::involutive)};
}

RRLGroupoid groupoid_from_basic(const BasicAlgebra& A) {
  FiniteLattice L = induced_lattice(A);
  const int n = A.n;
  BinTable odot(n * n, 0), arrow(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      odot[x * n + y] = A.neg(A.plus(A.neg(x), A.neg(y)));
      arrow[x * n + y] = A.plus(y, A.neg(x));
    }
  return validate_rrl(L, odot, arrow);
}

BasicAlgebra basic_from_groupoid(const RRLGroupoid& G) {
  PropertyReport r = classify(G);
  if (!r.lukasiewicz_type) {
    std::string why = !r.integral       ? "not integral"
                      : !r.involutive   ? "not involutive"
                                        : "Lukasiewicz identity fails";
    throw Error("NotLukasiewiczType", why);
  }
  const int n = G.lattice.n;
  BinTable oplus(n * n, 0);
  UnTable neg(n);
  for (int x = 0; x < n; ++x) neg[x] = G.neg(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) oplus[x * n + y] = G.neg(G.prod(neg[x], neg[y]));
  return validate_basic(G.lattice.names, oplus, neg, G.lattice.bottom);
}

Remark4Report check_remark4(const BasicAlgebra& A) {
  const int n = A.n;
  auto odot = [&](int x, int y) { return A.neg(A.plus(A.neg(x), A.neg(y))); };
  Remark4Report r;
  r.oplus_associative = r.odot_associative = true;
  r.oplus_commutative = r.odot_commutative = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (A.plus(x, y) != A.plus(y, x)) r.oplus_commutative = false;
      if (odot(x, y) != odot(y, x)) r.odot_commutative = false;
      for (int z = 0; z < n; ++z) {
        if (A.plus(A.plus(x, y), z) != A.plus(x, A.plus(y, z))) r.oplus_associative = false;
        if (odot(odot(x, y), z) != odot(x, odot(y, z))) r.odot_associative = false;
      }
    }
  r.associativity_agrees = r.oplus_associative == r.odot_associative;
  r.commutativity_agrees = r.oplus_commutative == r.odot_commutative;
  return r;
}

bool is_mv(const BasicAlgebra& A) { return check_remark4(A).oplus_associative; }

ImplicationReduct implication_reduct(const BasicAlgebra& A) {
  ImplicationReduct R;
  R.names = A.names;
  R.n = A.n;
  R.zero = A.zero;
  R.imp.assign(A.n * A.n, 0);
  for (int x = 0; x < A.n; ++x)
    for (int y = 0; y < A.n; ++y) R.imp[x * A.n + y] = A.plus(A.neg(x), y);
  return R;
}

std::vector<IdentityCheck> check_reduct_identities(const ImplicationReduct& R) {
  const int n = R.n;
  const int one = R.one();
  auto ii = [&](int x, int y) { return R.at(x, y); };
  std::vector<IdentityCheck> out;
  IdentityCheck i0{"I0*", true, {}}, i1{"I1*", true, {}}, lu{"L", true, {}}, i4{"I4", true, {}},
      i5{"I5", true, {}};
  for (int x = 0; x < n; ++x) {
    if (ii(x, x) != one || ii(x, one) != one || ii(one, x) != x) {
      i0 = {"I0*", false, {x}};
      break;
    }
  }
  for (int x = 0; x < n && i1.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (ii(y, ii(x, y)) != one) {
        i1 = {"I1*", false, {x, y}};
        break;
      }
  for (int x = 0; x < n && lu.holds; ++x)
    for (int y = 0; y < n; ++y)
      if (ii(ii(x, y), y) != ii(ii(y, x), x)) {
        lu = {"L", false, {x, y}};
        break;
      }
  // (I4), read as (((x=>y)=>y)=>z) => (x=>z) = 1
  for (int x = 0; x < n && i4.holds; ++x)
    for (int y = 0; y < n && i4.holds; ++y)
      for (int z = 0; z < n; ++z)
        if (ii(ii(ii(ii(x, y), y), z), ii(x, z)) != one) {
          i4 = {"I4", false, {x, y, z}};
          break;
        }
  for (int x = 0; x < n; ++x)
    if (ii(R.zero, x) != one) {
      i5 = {"I5", false, {x}};
      break;
    }
  out.push_back(i0);
  out.push_back(i1);
  out.push_back(lu);
  out.push_back(i4);
  out.push_back(i5);
  return out;
}

FiniteLattice reduct_order(const ImplicationReduct& R) {
  for (const auto& c : check_reduct_identities(R))
    if (!c.holds) throw Error("IdentityFails", "identity (" + c.name + ") fails", c.witness);
  const int n = R.n;
  const int one = R.one();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (R.at(x, y) == one) pairs.emplace_back(x, y);
  FiniteLattice L = build_lattice_indexed(R.names, pairs);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.v(x, y) != R.at(R.at(x, y), y))
        throw Error("IdentityFails", "join formula (x=>y)=>y disagrees with derived order", {x, y});
  return L;
}

BasicAlgebra basic_from_reduct(const ImplicationReduct& R) {
  reduct_order(R);  // verifies the identities and the order
  const int n = R.n;
  UnTable neg(n);
  BinTable oplus(n * n, 0);
  for (int x = 0; x < n; ++x) neg[x] = R.at(x, R.zero);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) oplus[x * n + y] = R.at(neg[x], y);
  BasicAlgebra A;
  try {
    A = validate_basic(R.names, oplus, neg, R.zero);
  } catch (const Error& e) {
    throw Error("NotReconstructible", std::string("reconstructed algebra invalid: ") + e.what(),
                e.witness());
  }
  return A;
}

BasicAlgebra mv_chain(int n) {
  if (n < 2) throw Error("InvalidSize", "chain needs at least 2 elements");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
  BinTable oplus(n * n, 0);
  UnTable neg(n);
  for (int i = 0; i < n; ++i) {
    neg[i] = n - 1 - i;
    for (int j = 0; j < n; ++j) oplus[i * n + j] = std::min(i + j, n - 1);
  }
  return validate_basic(names, oplus, neg, 0);
}

}  // namespace resilat
