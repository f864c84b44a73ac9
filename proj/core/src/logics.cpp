#include "resilat/logics.hpp"

namespace resilat {

KleeneAlgebra check_kleene(const FiniteLattice& L, const UnTable& tilde) {
  if (!is_distributive(L)) throw Error("NotDistributive", "lattice is not distributive");
  Involution t = validate_involution(L, tilde);
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (!L.le(L.m(x, t(x)), L.v(y, t(y))))
        throw Error("NormalityFails",
                    "x /\\ ~x <= y \\/ ~y fails at ('" + L.names[x] + "','" + L.names[y] + "')",
                    {x, y});
  return KleeneAlgebra{L, t};
}

std::optional<int> relative_pseudocomplement(const FiniteLattice& L, int a, int b) {
  int best = -1;
  for (int x = 0; x < L.n; ++x)
    if (L.le(L.m(a, x), b)) best = best < 0 ? x : L.v(best, x);
  if (best < 0 || !L.le(L.m(a, best), b)) return std::nullopt;
  return best;
}

NelsonAlgebra build_nelson(const KleeneAlgebra& K) {
  const FiniteLattice& L = K.lattice;
  const int n = L.n;
  BinTable arrow(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto rp = relative_pseudocomplement(L, a, L.v(K.tilde(a), b));
      if (!rp)
        throw Error("MissingRelativePseudocomplement",
                    "a |> (~a \\/ b) does not exist at ('" + L.names[a] + "','" + L.names[b] + "')",
                    {a, b});
      arrow[a * n + b] = *rp;
    }
  NelsonAlgebra N{K, arrow};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (N.arr(L.m(x, y), z) != N.arr(x, N.arr(y, z)))
          throw Error("NelsonIdentityFails",
                      "(N) fails at ('" + L.names[x] + "','" + L.names[y] + "','" + L.names[z] +
                          "')",
                      {x, y, z});
  return N;
}

RRLGroupoid nelson_to_residuated(const NelsonAlgebra& N) {
  const FiniteLattice& L = N.kleene.lattice;
  const Involution& t = N.kleene.tilde;
  const int n = L.n;
  BinTable imp(n * n, 0), star(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      imp[x * n + y] = L.m(N.arr(x, y), N.arr(t(y), t(x)));
      star[x * n + y] = L.v(t(N.arr(x, t(y))), t(N.arr(y, t(x))));
    }
  try {
    return validate_rrl(L, star, imp);
  } catch (const Error& e) {
    throw Error("ConstructionInvalid", std::string("Spinks-Veroff tables invalid: ") + e.what(),
                e.witness());
  }
}

bool check_3_potency(const RRLGroupoid& G) {
  const int n = G.lattice.n;
  BinTable imp = derived_implication(G);
  auto ii = [&](int x, int y) { return imp[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ii(x, ii(x, ii(x, y))) != ii(x, ii(x, y))) return false;
  return true;
}

OrthomodularReport check_orthomodular(const FiniteLattice& L, const UnTable& tilde) {
  Involution t = validate_involution(L, tilde);
  for (int x = 0; x < L.n; ++x)
    if (L.m(x, t(x)) != L.bottom)
      throw Error("NotOrthocomplemented", "x /\\ ~x != 0 at '" + L.names[x] + "'", {x});
  OrthomodularReport r;
  r.orthocomplemented = true;
  r.orthomodular = true;
  for (int x = 0; x < L.n && r.orthomodular; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.le(x, y) && L.v(x, L.m(t(x), y)) != y) {
        r.orthomodular = false;
        r.witness = {x, y};
        break;
      }
  return r;
}

RRLGroupoid oml_to_groupoid(const FiniteLattice& L, const UnTable& tilde) {
  OrthomodularReport rep = check_orthomodular(L, tilde);
  if (!rep.orthomodular)
    throw Error("OrthomodularFails",
                "(OML) fails at ('" + L.names[rep.witness[0]] + "','" + L.names[rep.witness[1]] +
                    "')",
                rep.witness);
  const int n = L.n;
  BinTable odot(n * n, 0), arrow(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      arrow[x * n + y] = L.v(L.m(x, y), tilde[x]);
      odot[x * n + y] = L.m(L.v(x, tilde[y]), y);
    }
  return validate_rrl(L, odot, arrow);
}

bool check_OMI(const BasicAlgebra& A) {
  FiniteLattice L = induced_lattice(A);
  for (int x = 0; x < A.n; ++x)
    for (int y = 0; y < A.n; ++y)
      if (A.plus(y, L.m(x, y)) != y) return false;
  return true;
}

bool check_OMI_star(const RRLGroupoid& G) {
  const FiniteLattice& L = G.lattice;
  BinTable imp = derived_implication(G);
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (imp[L.v(G.neg(x), G.neg(y)) * L.n + y] != y) return false;
  return true;
}

}  // namespace resilat
