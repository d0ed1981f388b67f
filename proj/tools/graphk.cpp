// graphk: K-theory invariants, classification decisions and symbolic
// Leavitt path algebra computations for finite directed graphs.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 unknown verdict, 64 usage error, 65 bad input data.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphk/citations.hpp"
#include "graphk/classify.hpp"
#include "graphk/error.hpp"
#include "graphk/genmap.hpp"
#include "graphk/invariants.hpp"
#include "graphk/tensorelem.hpp"

namespace {

constexpr const char* kVersion = "graphk 0.1.0";

using nlohmann::ordered_json;
using namespace graphk;

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUnknown = 2,
  kUsage = 64,
  kDataErr = 65,
};

// A graph argument is an inline JSON literal, "-" for stdin, or a path.
std::string slurp_arg(const std::string& arg) {
  std::string trimmed = arg;
  size_t first = trimmed.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && trimmed[first] == '{') return trimmed;
  if (trimmed == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(trimmed);
  if (!in) throw DataError("cannot open file '" + trimmed + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& arg) { return parse_graph(slurp_arg(arg)); }

GeneratorMap load_map(const std::string& arg) {
  return parse_generator_map(slurp_arg(arg));
}

ordered_json coords_json(const std::vector<Int>& coords) {
  ordered_json a = ordered_json::array();
  for (const Int& c : coords) a.push_back(c.str());
  return a;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json scaled_group_json(const ScaledGroup& s) {
  ordered_json j;
  j["group"] = to_string(s.group);
  j["scale"] = coords_json(s.scale.coords);
  j["scale_desc"] = s.scale_description();
  return j;
}

ordered_json extension_json(const ExtensionData& e) {
  ordered_json j;
  j["sub"] = to_string(e.sub);
  j["quotient"] = to_string(e.quotient);
  if (e.total)
    j["total"] = to_string(*e.total);
  else
    j["total"] = nullptr;
  j["split"] = e.split == SplitState::Yes ? "yes" : "unknown";
  j["citations"] = e.citations;
  j["notes"] = e.notes;
  return j;
}

void print_extension_text(std::ostream& os, const ExtensionData& e) {
  os << "sub = " << to_string(e.sub) << "\n";
  os << "quotient = " << to_string(e.quotient) << "\n";
  if (e.total)
    os << "total = " << to_string(*e.total) << "\n";
  else
    os << "total = (not forced; extension class undetermined)\n";
  os << "split = " << (e.split == SplitState::Yes ? "yes" : "unknown") << "\n";
  os << "citations:";
  for (const auto& c : e.citations) os << " [" << c << "]";
  os << "\n";
  for (const auto& n : e.notes) os << "note: " << n << "\n";
}

void emit(const ordered_json& j, bool json_format, const std::string& text) {
  if (json_format)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

struct Options {
  std::string format = "text";
  unsigned long long seed = 0;  // reserved for randomized subroutines

  bool json() const { return format == "json"; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theory invariants and symbolic Leavitt path algebra "
               "computations for finite directed graphs"};
  app.require_subcommand(0, 1);
  Options opt;
  app.add_option("--format", opt.format, "Output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed,
                 "Seed for randomized subroutines (reserved; all current "
                 "computations are deterministic)");
  bool show_version = false, show_cite = false;
  app.add_flag("--version", show_version, "Print version and exit");
  app.add_flag("--cite", show_cite,
               "Print the citation anchors used in reports and exit");

  std::string garg, garg2, vertex_arg, expr_arg, map_arg;
  std::string flavor = "top", g0_lit = "0", g1_lit = "0";
  unsigned long long rose_n = 0;
  size_t cycle_cap = kDefaultCycleCap;
  ClassifyOptions copts;
  std::string bound_str = copts.order_bound.str();

  auto* bf = app.add_subcommand("bf", "Bowen-Franks group with unit scale");
  bf->add_option("graph", garg, "Graph file or inline JSON")->required();

  auto* bfd = app.add_subcommand("bf-dual", "Dual Bowen-Franks group");
  bfd->add_option("graph", garg, "Graph file or inline JSON")->required();

  auto* kth = app.add_subcommand("ktheory", "K-theory of the graph algebra");
  kth->add_option("graph", garg, "Graph file or inline JSON")->required();
  kth->add_option("--flavor", flavor, "alg (path algebra) or top (completion)")
      ->check(CLI::IsMember({"alg", "top"}))
      ->capture_default_str();

  auto* kk = app.add_subcommand("kk", "Bivariant class group of the path algebras");
  kk->add_option("e", garg, "Source graph")->required();
  kk->add_option("f", garg2, "Target graph")->required();

  auto* kkc = app.add_subcommand("KK", "Bivariant class group of the completions");
  kkc->add_option("e", garg, "Source graph")->required();
  kkc->add_option("f", garg2, "Target graph")->required();

  auto* coeff = app.add_subcommand("kk-coeff", "Bivariant classes against coefficient groups");
  coeff->add_option("e", garg, "Source graph")->required();
  coeff->add_option("--g0", g0_lit, "Degree-0 coefficient group literal")
      ->capture_default_str();
  coeff->add_option("--g1", g1_lit, "Degree-1 coefficient group literal")
      ->capture_default_str();

  auto* ck = app.add_subcommand("comp-kernel", "Kernel of the completion comparison map");
  ck->add_option("e", garg, "Source graph")->required();
  ck->add_option("f", garg2, "Target graph")->required();

  auto* ci = app.add_subcommand("comp-iso", "Is the completion comparison map an isomorphism?");
  ci->add_option("e", garg, "Source graph")->required();
  ci->add_option("f", garg2, "Target graph")->required();

  auto* spi = app.add_subcommand("spi", "Simple pure infiniteness report");
  spi->add_option("graph", garg, "Graph file or inline JSON")->required();
  spi->add_option("--cycle-cap", cycle_cap, "Simple cycle enumeration cap")
      ->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Kirchberg-Phillips classification by scaled Bowen-Franks data");
  cls->add_option("e", garg, "First graph")->required();
  cls->add_option("f", garg2, "Second graph")->required();
  cls->add_option("--bound", bound_str, "Torsion order bound for the exhaustive search")
      ->capture_default_str();
  cls->add_option("--budget", copts.budget, "Automorphism candidate budget")
      ->capture_default_str();

  auto* lift = app.add_subcommand("lift-report", "Homotopy classes, lifting fiber and uniqueness");
  lift->add_option("e", garg, "Source graph")->required();
  lift->add_option("f", garg2, "Target graph")->required();

  auto* splice = app.add_subcommand("splice", "Cuntz splice at a vertex");
  splice->add_option("graph", garg, "Graph file or inline JSON")->required();
  splice->add_option("vertex", vertex_arg, "Vertex to splice at")->required();

  auto* rosecmd = app.add_subcommand("rose", "Rose graph with n loops");
  rosecmd->add_option("n", rose_n, "Number of loops")->required();

  auto* elnf = app.add_subcommand("element-nf", "Normal form of a path algebra element");
  elnf->add_option("graph", garg, "Graph file or inline JSON")->required();
  elnf->add_option("expr", expr_arg, "Element expression")->required();

  auto* vh = app.add_subcommand("verify-hom", "Verify a generator map as a *-homomorphism");
  vh->add_option("map", map_arg, "Generator map file or inline JSON")->required();

  auto* du = app.add_subcommand("duality-unitary", "Duality element of a verified map");
  du->add_option("map", map_arg, "Generator map file or inline JSON")->required();

  auto* tw = app.add_subcommand("twist", "Twist a verified map by a unitary over phi(1)");
  tw->add_option("map", map_arg, "Generator map file or inline JSON")->required();
  tw->add_option("u", expr_arg, "Unitary expression in the target algebra")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;  // --help is a success
  }

  if (show_version) {
    std::cout << kVersion << "\n";
    return kOk;
  }
  if (show_cite) {
    for (const auto& a : cite::registry())
      std::cout << "[" << a.key << "] " << a.text << "\n";
    return kOk;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*bf) {
      ScaledGroup s = bowen_franks(load_graph(garg));
      ordered_json j = scaled_group_json(s);
      j["citations"] = {cite::kBowenFranks, cite::kScaleConvention};
      emit(j, opt.json(),
           to_string(s.group) + " (scale: " + s.scale_description() + ")\n");
      return kOk;
    }
    if (*bfd) {
      FgAb d = bowen_franks_dual(load_graph(garg));
      ordered_json j;
      j["group"] = to_string(d);
      j["citations"] = {cite::kBowenFranks};
      emit(j, opt.json(), to_string(d) + "\n");
      return kOk;
    }
    if (*kth) {
      KTheoryData k = k_theory(load_graph(garg), flavor == "alg"
                                                     ? KFlavor::Algebraic
                                                     : KFlavor::Topological);
      ordered_json j;
      j["flavor"] = flavor == "alg" ? "algebraic" : "topological";
      j["k0"] = scaled_group_json(k.k0);
      j["k1_free"] = to_string(k.k1_free);
      j["k1_divisible"] = to_string(k.k1_divisible);
      j["citations"] = {cite::kBowenFranks, cite::kK1Split};
      std::ostringstream os;
      os << "K0 = " << to_string(k.k0.group)
         << " (scale: " << k.k0.scale_description() << ")\n";
      os << "K1 = ";
      if (k.k1_divisible.rank > 0) {
        os << to_string(k.k1_divisible);
        if (!k.k1_free.is_trivial()) os << " + " << to_string(k.k1_free);
      } else {
        os << to_string(k.k1_free);
      }
      os << "\n";
      emit(j, opt.json(), os.str());
      return kOk;
    }
    if (*kk || *kkc) {
      Graph e = load_graph(garg), f = load_graph(garg2);
      ExtensionData x = *kk ? kk_extension(e, f) : KK_extension(e, f);
      std::ostringstream os;
      print_extension_text(os, x);
      emit(extension_json(x), opt.json(), os.str());
      return kOk;
    }
    if (*coeff) {
      ExtensionData x = kk_with_coefficients(
          load_graph(garg), parse_group_literal(g0_lit), parse_group_literal(g1_lit));
      std::ostringstream os;
      print_extension_text(os, x);
      emit(extension_json(x), opt.json(), os.str());
      return kOk;
    }
    if (*ck) {
      DivisiblePower d = comp_kernel(load_graph(garg), load_graph(garg2));
      ordered_json j;
      j["kernel"] = to_string(d);
      j["rank"] = d.rank;
      j["citations"] = {cite::kCompFull};
      emit(j, opt.json(), to_string(d) + "\n");
      return kOk;
    }
    if (*ci) {
      CompIsoReport r = comp_is_iso(load_graph(garg), load_graph(garg2));
      ordered_json j;
      j["is_iso"] = r.is_iso;
      j["kernel"] = to_string(r.kernel);
      j["bf_e"] = to_string(r.bf_e);
      j["bf_f"] = to_string(r.bf_f);
      j["citations"] = r.citations;
      j["text"] = r.text;
      emit(j, opt.json(),
           std::string(r.is_iso ? "true" : "false") + "\n" + r.text + "\n");
      return r.is_iso ? kOk : kNegative;
    }
    if (*spi) {
      SpiReport r = spi_check(load_graph(garg), cycle_cap);
      ordered_json j;
      j["spi"] = r.spi;
      j["condition_L"] = r.condition_L;
      j["hereditary_saturated_trivial"] = r.hereditary_saturated_trivial;
      j["every_vertex_to_cycle"] = r.every_vertex_to_cycle;
      j["cycle_without_exit"] =
          r.cycle_without_exit ? ordered_json(*r.cycle_without_exit) : ordered_json(nullptr);
      j["nontrivial_subset"] =
          r.nontrivial_subset ? ordered_json(*r.nontrivial_subset) : ordered_json(nullptr);
      j["stranded_vertex"] =
          r.stranded_vertex ? ordered_json(*r.stranded_vertex) : ordered_json(nullptr);
      j["citation"] = r.citation;
      std::ostringstream os;
      os << "spi = " << (r.spi ? "true" : "false") << "\n";
      os << "condition_L = " << (r.condition_L ? "true" : "false") << "\n";
      os << "hereditary_saturated_trivial = "
         << (r.hereditary_saturated_trivial ? "true" : "false") << "\n";
      os << "every_vertex_to_cycle = "
         << (r.every_vertex_to_cycle ? "true" : "false") << "\n";
      if (r.cycle_without_exit) {
        os << "witness (cycle without exit):";
        for (const auto& id : *r.cycle_without_exit) os << " " << id;
        os << "\n";
      }
      if (r.nontrivial_subset) {
        os << "witness (hereditary saturated subset):";
        for (const auto& v : *r.nontrivial_subset) os << " " << v;
        os << "\n";
      }
      if (r.stranded_vertex)
        os << "witness (vertex with no path to a cycle): " << *r.stranded_vertex << "\n";
      os << "citation: [" << r.citation << "]\n";
      emit(j, opt.json(), os.str());
      return r.spi ? kOk : kNegative;
    }
    if (*cls) {
      try {
        copts.order_bound = Int(bound_str);
      } catch (const std::exception&) {
        throw DataError("bad --bound value '" + bound_str + "'");
      }
      ClassifyVerdict v = kp_classify(load_graph(garg), load_graph(garg2), copts);
      ordered_json j;
      j["answer"] = v.answer == Verdict::Isomorphic     ? "Isomorphic"
                    : v.answer == Verdict::NotIsomorphic ? "NotIsomorphic"
                                                         : "Unknown";
      j["certificate"] =
          v.certificate ? matrix_json(v.certificate->matrix) : ordered_json(nullptr);
      j["reason"] = v.reason;
      j["citations"] = v.citations;
      std::ostringstream os;
      os << j["answer"].get<std::string>() << "\n";
      if (v.certificate)
        os << "certificate: " << v.certificate->matrix.to_string() << "\n";
      os << "reason: " << v.reason << "\n";
      emit(j, opt.json(), os.str());
      switch (v.answer) {
        case Verdict::Isomorphic: return kOk;
        case Verdict::NotIsomorphic: return kNegative;
        case Verdict::Unknown: return kUnknown;
      }
    }
    if (*lift) {
      LiftReport r = lift_report(load_graph(garg), load_graph(garg2));
      ordered_json j;
      j["cstar_classes"] = extension_json(r.cstar_classes);
      j["leavitt_classes"] = extension_json(r.leavitt_classes);
      j["fiber"] = to_string(r.fiber);
      j["unique_lifting"] = r.unique_lifting;
      j["citations"] = r.citations;
      std::ostringstream os;
      os << "continuous M2-homotopy classes (minus zero):\n";
      print_extension_text(os, r.cstar_classes);
      os << "polynomial M2-homotopy classes (minus zero):\n";
      print_extension_text(os, r.leavitt_classes);
      os << "fiber of completion = " << to_string(r.fiber) << "\n";
      os << "every class lifts uniquely = " << (r.unique_lifting ? "true" : "false")
         << "\n";
      os << "citations:";
      for (const auto& c : r.citations) os << " [" << c << "]";
      os << "\n";
      emit(j, opt.json(), os.str());
      return kOk;
    }
    if (*splice) {
      Graph g = cuntz_splice(load_graph(garg), vertex_arg);
      std::cout << serialize_graph(g) << "\n";
      return kOk;
    }
    if (*rosecmd) {
      std::cout << serialize_graph(rose(rose_n)) << "\n";
      return kOk;
    }
    if (*elnf) {
      auto g = std::make_shared<Graph>(load_graph(garg));
      LeavittElement nf = parse_element(g, expr_arg).normal_form();
      ordered_json j;
      j["input"] = expr_arg;
      j["normal_form"] = to_string(nf);
      emit(j, opt.json(), to_string(nf) + "\n");
      return kOk;
    }
    if (*vh) {
      GeneratorMap m = load_map(map_arg);
      HomReport r = verify_hom(m);
      ordered_json j;
      j["verified"] = r.verified;
      j["unital"] = r.unital;
      j["property_p"] = r.property_p ? ordered_json(*r.property_p) : ordered_json(nullptr);
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["ok"] = c.ok;
        cj["residue"] = c.residue;
        checks.push_back(cj);
      }
      j["checks"] = checks;
      j["notes"] = r.notes;
      std::ostringstream os;
      os << (r.verified ? "verified" : "failed") << "\n";
      os << "unital = " << (r.unital ? "true" : "false") << "\n";
      if (r.property_p)
        os << "property (P) = " << (*r.property_p ? "true" : "false") << "\n";
      for (const auto* c : r.failures())
        os << "failed: " << c->name
           << (c->residue.empty() ? "" : "  [residue: " + c->residue + "]") << "\n";
      for (const auto& n : r.notes) os << "note: " << n << "\n";
      emit(j, opt.json(), os.str());
      return r.verified ? kOk : kNegative;
    }
    if (*du) {
      GeneratorMap m = load_map(map_arg);
      HomReport hr = verify_hom(m);
      if (!hr.verified)
        throw DataError("duality-unitary: the map does not verify as a *-homomorphism");
      DualityReport r = duality_unitary(m);
      ordered_json j;
      j["unitary"] = to_string(r.unitary);
      j["is_unitary"] = r.is_unitary;
      j["citation"] = r.citation;
      std::ostringstream os;
      os << "u = " << to_string(r.unitary) << "\n";
      os << "unitary = " << (r.is_unitary ? "true" : "false") << "\n";
      os << "citation: [" << r.citation << "]\n";
      emit(j, opt.json(), os.str());
      return r.is_unitary ? kOk : kNegative;
    }
    if (*tw) {
      GeneratorMap m = load_map(map_arg);
      HomReport hr = verify_hom(m);
      if (!hr.verified)
        throw DataError("twist: the map does not verify as a *-homomorphism");
      LeavittElement u = parse_element(m.target, expr_arg);
      GeneratorMap t = twist_hom(m, u);
      std::cout << serialize_generator_map(t) << "\n";
      return kOk;
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataErr;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataErr;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  std::cerr << app.help();
  return kUsage;
}
