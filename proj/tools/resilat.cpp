// resilat: finite-algebra workbench command line.
//
// Exit codes: 0 ok, 1 validation failure, 2 usage, 3 I/O.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resilat/congruence.hpp"
#include "resilat/enumeration.hpp"
#include "resilat/examples.hpp"
#include "resilat/io.hpp"
#include "resilat/logics.hpp"

using nlohmann::json;
using namespace resilat;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path);
  out << text;
}

// File argument: "-" = stdin, an existing path, or a built-in example name.
Structure load(const std::string& file) {
  if (file != "-") {
    std::ifstream probe(file);
    if (!probe) {
      auto names = example_names();
      if (std::find(names.begin(), names.end(), file) != names.end())
        return example(file);
      throw IoError("cannot open " + file);
    }
  }
  return parse_algebra(slurp(file));
}

const FiniteLattice* lattice_of(const Structure& s) {
  if (auto* x = std::get_if<LatticeStructure>(&s)) return &x->lattice;
  if (auto* x = std::get_if<SectionedLattice>(&s)) return &x->lattice;
  if (auto* x = std::get_if<RRLGroupoid>(&s)) return &x->lattice;
  if (auto* x = std::get_if<KleeneAlgebra>(&s)) return &x->lattice;
  if (auto* x = std::get_if<NelsonAlgebra>(&s)) return &x->kleene.lattice;
  return nullptr;
}

RRLGroupoid to_groupoid(const Structure& s) {
  if (auto* g = std::get_if<RRLGroupoid>(&s)) return *g;
  if (auto* x = std::get_if<SectionedLattice>(&s)) {
    if (x->tilde) return groupoid_from_sectioned(*x);
    return groupoid_from_sectional_involutions(x->lattice, x->family);
  }
  if (auto* a = std::get_if<BasicAlgebra>(&s)) return groupoid_from_basic(*a);
  if (auto* r = std::get_if<ImplicationReduct>(&s))
    return groupoid_from_basic(basic_from_reduct(*r));
  if (auto* n = std::get_if<NelsonAlgebra>(&s)) return nelson_to_residuated(*n);
  if (auto* k = std::get_if<KleeneAlgebra>(&s))
    return nelson_to_residuated(build_nelson(*k));
  if (auto* l = std::get_if<LatticeStructure>(&s)) {
    if (l->neg) return oml_to_groupoid(l->lattice, l->neg->map);
    throw UsageError("a bare lattice has no groupoid structure; supply a neg table");
  }
  throw UsageError("no groupoid construction for this kind");
}

Structure transform_to(const Structure& s, const std::string& target) {
  const std::string from = kind_of(s);
  if (target == from) return s;
  if (target == "lattice") {
    if (auto* a = std::get_if<BasicAlgebra>(&s)) return LatticeStructure{induced_lattice(*a), {}};
    if (auto* r = std::get_if<ImplicationReduct>(&s))
      return LatticeStructure{reduct_order(*r), {}};
    if (const FiniteLattice* L = lattice_of(s)) return LatticeStructure{*L, {}};
  }
  if (target == "rrl-groupoid") return to_groupoid(s);
  if (target == "sectioned-lattice") {
    if (auto* g = std::get_if<RRLGroupoid>(&s)) return sectioned_from_groupoid(*g);
    if (auto* a = std::get_if<BasicAlgebra>(&s)) return sectioned_from_basic(*a);
  }
  if (target == "basic-algebra") {
    if (auto* g = std::get_if<RRLGroupoid>(&s)) return basic_from_groupoid(*g);
    if (auto* x = std::get_if<SectionedLattice>(&s)) return basic_from_sectioned(*x);
    if (auto* r = std::get_if<ImplicationReduct>(&s)) return basic_from_reduct(*r);
  }
  if (target == "implication-reduct") {
    if (auto* a = std::get_if<BasicAlgebra>(&s)) return implication_reduct(*a);
    if (auto* g = std::get_if<RRLGroupoid>(&s))
      return implication_reduct(basic_from_groupoid(*g));
  }
  throw UsageError("no transform from " + from + " to " + target);
}

json report_json(const PropertyReport& r) {
  json j;
  j["integral"] = r.integral;
  j["commutative"] = r.commutative;
  j["associative"] = r.associative;
  j["double_negation"] = r.double_negation;
  j["involutive"] = r.involutive;
  j["condition_C"] = r.condition_C;
  j["divisibility"] = r.divisibility;
  j["I0"] = r.I0;
  j["I1"] = r.I1;
  j["I2"] = r.I2;
  j["I3"] = r.I3;
  j["I3_star"] = r.I3_star;
  j["identity_D"] = r.identity_D;
  j["lukasiewicz_identity"] = r.lukasiewicz_identity;
  j["lukasiewicz_type"] = r.lukasiewicz_type;
  json lemma = json::array();
  for (Verdict v : r.lemma1_items) lemma.push_back(to_string(v));
  j["lemma1"] = std::move(lemma);
  return j;
}

int cmd_check(const std::string& file, const std::string& as_kind) {
  Structure s = load(file);
  const std::string kind = kind_of(s);
  if (!as_kind.empty() && as_kind != kind) {
    std::cerr << "kind mismatch: file is " << kind << ", expected " << as_kind << "\n";
    return 1;
  }
  std::cout << "ok: " << kind << ", " << std::visit([](const auto& x) {
    if constexpr (requires { x.n; }) return x.n;
    else if constexpr (requires { x.lattice.n; }) return x.lattice.n;
    else return x.kleene.lattice.n;
  }, s) << " elements\n";
  return 0;
}

int cmd_classify(const std::string& file, bool as_json) {
  RRLGroupoid G = to_groupoid(load(file));
  PropertyReport r = classify(G);
  if (as_json) {
    std::cout << report_json(r).dump(2) << "\n";
    return 0;
  }
  auto line = [](const char* k, bool v) { std::cout << k << ": " << (v ? "yes" : "no") << "\n"; };
  line("integral", r.integral);
  line("commutative", r.commutative);
  line("associative", r.associative);
  line("double_negation", r.double_negation);
  line("involutive", r.involutive);
  line("condition_C", r.condition_C);
  line("divisibility", r.divisibility);
  line("I0", r.I0);
  line("I1", r.I1);
  line("I2", r.I2);
  line("I3", r.I3);
  line("I3_star", r.I3_star);
  line("identity_D", r.identity_D);
  line("lukasiewicz_identity", r.lukasiewicz_identity);
  line("lukasiewicz_type", r.lukasiewicz_type);
  static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi"};
  for (int i = 0; i < 6; ++i)
    std::cout << "lemma1." << roman[i] << ": " << to_string(r.lemma1_items[i]) << "\n";
  return 0;
}

int cmd_transform(const std::string& file, const std::string& target, const std::string& out) {
  Structure s = transform_to(load(file), target);
  emit(out, serialize_algebra(s));
  return 0;
}

template <class T>
bool same(const T& a, const T& b) {
  return a == b;
}

int cmd_roundtrip(const std::string& file) {
  Structure s = load(file);
  const std::string kind = kind_of(s);
  bool ok = false;
  if (auto* x = std::get_if<SectionedLattice>(&s)) {
    RRLGroupoid G = x->tilde ? groupoid_from_sectioned(*x)
                             : groupoid_from_sectional_involutions(x->lattice, x->family);
    SectionedLattice back = x->tilde ? sectioned_from_groupoid(G)
                                     : sectional_involutions_from_groupoid(G);
    ok = same(*x, back);
  } else if (auto* g = std::get_if<RRLGroupoid>(&s)) {
    SectionedLattice S = sectioned_from_groupoid(*g);
    ok = same(*g, groupoid_from_sectioned(S));
    if (ok && classify(*g).lukasiewicz_type)
      ok = same(*g, groupoid_from_basic(basic_from_groupoid(*g)));
  } else if (auto* a = std::get_if<BasicAlgebra>(&s)) {
    ok = same(*a, basic_from_reduct(implication_reduct(*a))) &&
         same(*a, basic_from_groupoid(groupoid_from_basic(*a))) &&
         same(*a, basic_from_sectioned(sectioned_from_basic(*a)));
  } else if (auto* r = std::get_if<ImplicationReduct>(&s)) {
    ok = same(*r, implication_reduct(basic_from_reduct(*r)));
  } else {
    throw UsageError("no round-trip defined for kind " + kind);
  }
  std::cout << (ok ? "round-trip ok" : "round-trip mismatch") << "\n";
  return ok ? 0 : 1;
}

int cmd_congruence(const std::string& file, const std::string& report, bool as_json) {
  Structure s = load(file);
  AlgebraOps A;
  std::optional<RRLGroupoid> derived;
  const RRLGroupoid* G = std::get_if<RRLGroupoid>(&s);
  if (G)
    A = ops_of(*G);
  else if (auto* a = std::get_if<BasicAlgebra>(&s)) {
    A = ops_of(*a);
    derived = groupoid_from_basic(*a);
    G = &*derived;
  }
  else if (const FiniteLattice* L = lattice_of(s))
    A = ops_of(*L);
  else
    throw UsageError("no congruence report for kind " + kind_of(s));

  json j;
  j["kind"] = kind_of(s);
  j["report"] = report;
  if (report == "terms") {
    if (!G) throw UsageError("--report terms needs an rrl-groupoid");
    TermReport t = check_terms(*G);
    j["malcev"] = to_string(t.malcev);
    j["one_regular_term"] = to_string(t.one_regular_term);
    j["zero_term"] = to_string(t.zero_term);
    j["local_zero_terms"] = to_string(t.local_zero_terms);
    if (!t.witness.empty()) j["witness"] = t.witness;
  } else {
    CongruenceLattice CL = all_congruences(A);
    j["congruences"] = CL.count();
    if (report == "permutability") {
      j["permutable"] = check_permutable(CL);
    } else if (report == "distributivity") {
      j["distributive"] = check_distributive_con(A, CL);
    } else if (report == "regularity") {
      int c = 0;
      if (G)
        c = G->lattice.bottom;
      else if (auto* a = std::get_if<BasicAlgebra>(&s))
        c = a->zero;
      else
        c = lattice_of(s)->bottom;
      RegularityReport r = check_regularity(A, CL, c);
      j["c"] = c;
      j["c_regular"] = r.c_regular;
      j["c_locally_regular"] = r.c_locally_regular;
      j["fully_regular"] = r.fully_regular;
    } else {
      throw UsageError("unknown report " + report);
    }
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  }
  return 0;
}

EnumerationCaps caps_from_env() {
  EnumerationCaps caps;
  if (const char* env = std::getenv("RESILAT_SIZE_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) caps = EnumerationCaps{cap, cap, cap};
  }
  return caps;
}

int cmd_enumerate(const std::string& kind, int n, bool do_census, bool count_only, bool as_json,
                  const std::string& out) {
  EnumerationCaps caps = caps_from_env();
  if (do_census) {
    CensusRow row = census(kind, n, caps);
    if (as_json) {
      json j;
      j["kind"] = row.kind;
      j["size"] = row.size;
      j["total"] = row.total;
      j["flags"] = row.flag_counts;
      emit(out, j.dump(2) + "\n");
    } else {
      std::ostringstream ss;
      ss << "kind,size,flag,count\n";
      ss << row.kind << "," << row.size << ",total," << row.total << "\n";
      for (auto& [flag, count] : row.flag_counts)
        ss << row.kind << "," << row.size << "," << flag << "," << count << "\n";
      emit(out, ss.str());
    }
    return 0;
  }

  std::vector<Structure> instances;
  if (kind == "lattice") {
    for (FiniteLattice& L : enumerate_lattices(n, caps))
      instances.push_back(LatticeStructure{std::move(L), {}});
  } else if (kind == "rrl-groupoid") {
    std::map<std::string, RRLGroupoid> dedup;
    for (const FiniteLattice& L : enumerate_lattices(n, caps_from_env()))
      for (RRLGroupoid& G : enumerate_rrl_groupoids(L, caps))
        dedup.emplace(canonical_form(G.lattice, {&G.odot, &G.arrow}), std::move(G));
    for (auto& [key, G] : dedup) instances.push_back(std::move(G));
  } else if (kind == "basic-algebra") {
    for (BasicAlgebra& A : enumerate_basic_algebras(n, caps)) instances.push_back(std::move(A));
  } else {
    throw UsageError("cannot enumerate kind " + kind);
  }

  if (count_only) {
    emit(out, std::to_string(instances.size()) + "\n");
    return 0;
  }
  std::ostringstream ss;
  for (const Structure& s : instances) ss << serialize_algebra(s);
  emit(out, ss.str());
  return 0;
}

int cmd_examples(const std::string& name, const std::string& out) {
  if (name.empty()) {
    std::ostringstream ss;
    for (const std::string& n : example_names()) ss << n << "\n";
    emit(out, ss.str());
    return 0;
  }
  emit(out, serialize_algebra(example(name)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench for right-residuated l-groupoids"};
  app.require_subcommand(1);

  std::string file, as_kind, target, out, report = "regularity", kind = "lattice", name;
  bool as_json = false, do_census = false, count_only = false;
  int size = 0;

  auto* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("file", file)->required();
  check->add_option("--as", as_kind, "require this kind");

  auto* classify_cmd = app.add_subcommand("classify", "property report for the groupoid view");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* transform = app.add_subcommand("transform", "convert between kinds");
  transform->add_option("file", file)->required();
  transform->add_option("--to", target)->required();
  transform->add_option("-o,--output", out);

  auto* roundtrip = app.add_subcommand("roundtrip", "run the kind's round-trip transforms");
  roundtrip->add_option("file", file)->required();

  auto* congruence = app.add_subcommand("congruence", "congruence-lattice reports");
  congruence->add_option("file", file)->required();
  congruence->add_option("--report", report)
      ->check(CLI::IsMember({"regularity", "permutability", "distributivity", "terms"}));
  congruence->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate instances up to isomorphism");
  enumerate->add_option("--kind", kind)
      ->check(CLI::IsMember({"lattice", "rrl-groupoid", "basic-algebra"}));
  enumerate->add_option("--size", size)->required();
  enumerate->add_flag("--census", do_census);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--json", as_json);
  enumerate->add_option("-o,--output", out);

  auto* examples_cmd = app.add_subcommand("examples", "write a built-in fixture");
  examples_cmd->add_option("name", name);
  examples_cmd->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(file, as_kind);
    if (*classify_cmd) return cmd_classify(file, as_json);
    if (*transform) return cmd_transform(file, target, out);
    if (*roundtrip) return cmd_roundtrip(file);
    if (*congruence) return cmd_congruence(file, report, as_json);
    if (*enumerate) return cmd_enumerate(kind, size, do_census, count_only, as_json, out);
    if (*examples_cmd) return cmd_examples(name, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " witness(";
      for (size_t i = 0; i < e.witness().size(); ++i)
        std::cerr << (i ? "," : "") << e.witness()[i];
      std::cerr << ")";
    }
    std::cerr << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
