#include "resilat/io.hpp"

#include <json.hpp>

namespace resilat {

using nlohmann::json;

namespace {

std::vector<std::string> parse_elements(const json& j) {
  if (!j.contains("elements") || !j["elements"].is_array())
    throw Error("ParseError", "missing 'elements' array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw Error("ParseError", "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  return names;
}

int index_of(const std::vector<std::string>& names, const std::string& name) {
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    if (names[i] == name) return i;
  throw Error("ParseError", "unknown element name '" + name + "'");
}

FiniteLattice parse_lattice_part(const json& j, const std::vector<std::string>& names) {
  if (!j.contains("leq") || !j["leq"].is_array())
    throw Error("ParseError", "kind requires a 'leq' pair list");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : j["leq"]) {
    if (!p.is_array() || p.size() != 2) throw Error("ParseError", "'leq' entries must be pairs");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return build_lattice(names, pairs);
}

const json& op_table(const json& j, const std::string& name) {
  if (!j.contains("ops") || !j["ops"].contains(name))
    throw Error("ParseError", "missing operation table '" + name + "'");
  return j["ops"][name];
}

BinTable parse_binary(const json& t, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (!t.is_array() || static_cast<int>(t.size()) != n)
    throw Error("ParseError", "binary table must have one row per element");
  BinTable out(n * n, 0);
  for (int x = 0; x < n; ++x) {
    if (!t[x].is_array() || static_cast<int>(t[x].size()) != n)
      throw Error("ParseError", "binary table rows must have one entry per element");
    for (int y = 0; y < n; ++y) out[x * n + y] = index_of(names, t[x][y].get<std::string>());
  }
  return out;
}

UnTable parse_unary(const json& t, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (!t.is_array() || static_cast<int>(t.size()) != n)
    throw Error("ParseError", "unary table must have one entry per element");
  UnTable out(n, 0);
  for (int x = 0; x < n; ++x) out[x] = index_of(names, t[x].get<std::string>());
  return out;
}

int parse_constant(const json& j, const std::string& key, const std::vector<std::string>& names) {
  if (!j.contains("constants") || !j["constants"].contains(key))
    throw Error("ParseError", "missing constant '" + key + "'");
  return index_of(names, j["constants"][key].get<std::string>());
}

json dump_binary(const BinTable& t, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  json rows = json::array();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y) row.push_back(names[t[x * n + y]]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json dump_unary(const UnTable& t, const std::vector<std::string>& names) {
  json row = json::array();
  for (int v : t) row.push_back(names[v]);
  return row;
}

// covering pairs of the order, the Hasse diagram
json dump_leq(const FiniteLattice& L) {
  json pairs = json::array();
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) {
      if (x == y || !L.le(x, y)) continue;
      bool covered = false;
      for (int z = 0; z < L.n && !covered; ++z)
        covered = z != x && z != y && L.le(x, z) && L.le(z, y);
      if (!covered) pairs.push_back(json::array({L.names[x], L.names[y]}));
    }
  return pairs;
}

}  // namespace

std::string kind_of(const Structure& s) {
  struct V {
    std::string operator()(const LatticeStructure&) { return "lattice"; }
    std::string operator()(const SectionedLattice&) { return "sectioned-lattice"; }
    std::string operator()(const RRLGroupoid&) { return "rrl-groupoid"; }
    std::string operator()(const BasicAlgebra&) { return "basic-algebra"; }
    std::string operator()(const ImplicationReduct&) { return "implication-reduct"; }
    std::string operator()(const KleeneAlgebra&) { return "kleene"; }
    std::string operator()(const NelsonAlgebra&) { return "nelson"; }
  };
  return std::visit(V{}, s);
}

Structure parse_algebra(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error("ParseError", e.what());
  }
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error("ParseError", "missing 'kind' string");
  const std::string kind = j["kind"].get<std::string>();
  auto names = parse_elements(j);

  if (kind == "lattice") {
    LatticeStructure s{parse_lattice_part(j, names), std::nullopt};
    if (j.contains("ops") && j["ops"].contains("neg"))
      s.neg = validate_involution(s.lattice, parse_unary(j["ops"]["neg"], names));
    return s;
  }
  if (kind == "sectioned-lattice") {
    FiniteLattice L = parse_lattice_part(j, names);
    const json& sections = op_table(j, "sections");
    std::vector<UnTable> maps(L.n, UnTable(L.n, -1));
    for (int a = 0; a < L.n; ++a) {
      if (!sections.contains(names[a]))
        throw Error("ParseError", "missing section map for base '" + names[a] + "'");
      const json& m = sections[names[a]];
      if (!m.is_array() || static_cast<int>(m.size()) != L.n)
        throw Error("ParseError", "section maps must be flat arrays over all elements");
      for (int x = 0; x < L.n; ++x) {
        if (m[x].is_null()) continue;
        maps[a][x] = index_of(names, m[x].get<std::string>());
      }
    }
    std::optional<Involution> tilde;
    if (j["ops"].contains("neg")) tilde = validate_involution(L, parse_unary(j["ops"]["neg"], names));
    SectionFamily F = validate_family(L, maps, FamilyMode::extensive);
    return SectionedLattice{std::move(L), std::move(tilde), std::move(F)};
  }
  if (kind == "rrl-groupoid") {
    FiniteLattice L = parse_lattice_part(j, names);
    return validate_rrl(L, parse_binary(op_table(j, "odot"), names),
                        parse_binary(op_table(j, "arrow"), names));
  }
  if (kind == "basic-algebra") {
    return validate_basic(names, parse_binary(op_table(j, "oplus"), names),
                          parse_unary(op_table(j, "neg"), names), parse_constant(j, "zero", names));
  }
  if (kind == "implication-reduct") {
    ImplicationReduct R;
    R.names = names;
    R.n = static_cast<int>(names.size());
    R.imp = parse_binary(op_table(j, "imp"), names);
    R.zero = parse_constant(j, "zero", names);
    reduct_order(R);  // validates the identities
    return R;
  }
  if (kind == "kleene") {
    FiniteLattice L = parse_lattice_part(j, names);
    return check_kleene(L, parse_unary(op_table(j, "neg"), names));
  }
  if (kind == "nelson") {
    FiniteLattice L = parse_lattice_part(j, names);
    KleeneAlgebra K = check_kleene(L, parse_unary(op_table(j, "neg"), names));
    NelsonAlgebra N = build_nelson(K);
    BinTable stored = parse_binary(op_table(j, "arrow"), names);
    if (stored != N.nelson_arrow)
      throw Error("ParseError", "stored nelson arrow disagrees with a |> (~a \\/ b)");
    return N;
  }
  throw Error("UnknownKind", "unknown kind '" + kind + "'");
}

std::string serialize_algebra(const Structure& s) {
  json j;
  j["kind"] = kind_of(s);
  struct V {
    json& j;
    void operator()(const LatticeStructure& x) {
      j["elements"] = x.lattice.names;
      j["leq"] = dump_leq(x.lattice);
      j["constants"] = {{"bottom", x.lattice.names[x.lattice.bottom]},
                        {"top", x.lattice.names[x.lattice.top]}};
      if (x.neg) j["ops"]["neg"] = dump_unary(x.neg->map, x.lattice.names);
    }
    void operator()(const SectionedLattice& x) {
      const auto& L = x.lattice;
      j["elements"] = L.names;
      j["leq"] = dump_leq(L);
      j["constants"] = {{"bottom", L.names[L.bottom]}, {"top", L.names[L.top]}};
      if (x.tilde) j["ops"]["neg"] = dump_unary(x.tilde->map, L.names);
      json sections;
      for (int a = 0; a < L.n; ++a) {
        json m = json::array();
        for (int e = 0; e < L.n; ++e) {
          int img = x.family.at(a, e);
          if (img < 0)
            m.push_back(nullptr);
          else
            m.push_back(L.names[img]);
        }
        sections[L.names[a]] = std::move(m);
      }
      j["ops"]["sections"] = std::move(sections);
    }
    void operator()(const RRLGroupoid& x) {
      const auto& L = x.lattice;
      j["elements"] = L.names;
      j["leq"] = dump_leq(L);
      j["constants"] = {{"bottom", L.names[L.bottom]}, {"top", L.names[L.top]}};
      j["ops"]["odot"] = dump_binary(x.odot, L.names);
      j["ops"]["arrow"] = dump_binary(x.arrow, L.names);
    }
    void operator()(const BasicAlgebra& x) {
      j["elements"] = x.names;
      j["constants"] = {{"zero", x.names[x.zero]}};
      j["ops"]["oplus"] = dump_binary(x.oplus, x.names);
      j["ops"]["neg"] = dump_unary(x.neg_table, x.names);
    }
    void operator()(const ImplicationReduct& x) {
      j["elements"] = x.names;
      j["constants"] = {{"zero", x.names[x.zero]}};
      j["ops"]["imp"] = dump_binary(x.imp, x.names);
    }
    void operator()(const KleeneAlgebra& x) {
      const auto& L = x.lattice;
      j["elements"] = L.names;
      j["leq"] = dump_leq(L);
      j["constants"] = {{"bottom", L.names[L.bottom]}, {"top", L.names[L.top]}};
      j["ops"]["neg"] = dump_unary(x.tilde.map, L.names);
    }
    void operator()(const NelsonAlgebra& x) {
      const auto& L = x.kleene.lattice;
      j["elements"] = L.names;
      j["leq"] = dump_leq(L);
      j["constants"] = {{"bottom", L.names[L.bottom]}, {"top", L.names[L.top]}};
      j["ops"]["neg"] = dump_unary(x.kleene.tilde.map, L.names);
      j["ops"]["arrow"] = dump_binary(x.nelson_arrow, L.names);
    }
  };
  std::visit(V{j}, s);
  return j.dump(2) + "\n";
}

}  // namespace resilat
