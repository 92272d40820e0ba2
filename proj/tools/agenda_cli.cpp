#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "agenda/error.hpp"
#include "agenda/frames.hpp"
#include "agenda/scenario.hpp"

using namespace agenda;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// parameter names mentioned by issue ids, in first-appearance order
std::vector<std::string> params_of_ids(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (const auto& id : ids) {
    std::string body = id;
    if (body.rfind("param:", 0) == 0) body = body.substr(6);
    else if (body.rfind("sumset:", 0) == 0) body = body.substr(7);
    else if (body.rfind("sum:", 0) == 0) body = body.substr(4, body.find("<=") == std::string::npos ? std::string::npos : body.find("<=") - 4);
    for (const auto& n : split(body, ',')) add(n);
  }
  return out;
}

int run_analyze(const std::string& file, bool json) {
  auto s = load_scenario_file(file);
  auto m = build_model(s);
  auto r = analyze(s, m);
  std::cout << (json ? report_json(r, m.space) + "\n" : report_text(r));
  return 0;
}

struct LatticeArgs {
  std::string params, issues, rule = "total";
  std::size_t ground = 0;
  bool dot = false, poset = false;
};

int run_lattice(const LatticeArgs& a, bool json) {
  if (a.ground) {
    if (a.dot) {
      std::cout << partition_lattice_dot(a.ground);
      return 0;
    }
    auto irr = enumerate_irreducibles(a.ground);
    if (json) {
      std::cout << ordered_json{{"ground", a.ground}, {"atoms", irr.atoms.size()}, {"coatoms", irr.coatoms.size()}}.dump(2) << "\n";
    } else {
      std::cout << "E(" << a.ground << "): " << irr.atoms.size() << " atoms, " << irr.coatoms.size() << " coatoms\n";
    }
    return 0;
  }
  std::vector<std::string> names;
  std::vector<std::string> ids;
  if (!a.issues.empty()) {
    ids = split(a.issues, ';');
    names = params_of_ids(ids);
  } else {
    names = split(a.params, ',');
  }
  if (names.empty()) throw Error(ErrorKind::Validation, "give --params, --issues or --ground");
  auto space = binary_space(names);
  if (a.poset) {
    std::cout << profile_poset_dot(space);
    return 0;
  }
  IssueSet issues;
  if (!ids.empty()) {
    const Rule rule = std::all_of(ids.begin(), ids.end(), [](const std::string& i) { return i.rfind("param:", 0) == 0; })
                          ? Rule::TotalDominance
                          : Rule::Sum;
    std::vector<Issue> v;
    for (const auto& id : ids)
      for (auto& is : resolve_issue(space, rule, id))
        if (std::none_of(v.begin(), v.end(), [&](const Issue& x) { return x.id == is.id; })) v.push_back(std::move(is));
    issues = IssueSet(std::move(v));
  } else if (a.rule == "sum") {
    issues = all_threshold_issues(space);
  } else if (a.rule == "total") {
    issues = projection_issues(space);
  } else {
    throw Error(ErrorKind::Validation, "--rule must be total or sum");
  }
  auto L = build_lattice(issues);
  if (!L.materialized()) throw Error(ErrorKind::NotMaterialized, "agenda lattice exceeds materialization caps");
  if (a.dot) {
    std::cout << lattice_dot(L);
    return 0;
  }
  auto dist = is_distributive(L);
  if (json) {
    ordered_json j;
    j["parameters"] = names;
    j["generators"] = L.generator_count();
    j["elements"] = ordered_json::array();
    for (const auto& e : L.elements())
      j["elements"].push_back({{"agenda", describe_element(L, e)}, {"blocks", e.block_count()}});
    j["distributive"] = dist.distributive;
    if (dist.witness) {
      j["witness"] = ordered_json::array();
      for (const auto& p : *dist.witness) j["witness"].push_back(describe_element(L, p));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "parameters: ";
  for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? "," : "") << names[i];
  std::cout << "\n" << L.generator_count() << " generators, " << L.elements().size() << " elements\n";
  for (const auto& e : L.elements()) std::cout << "  " << describe_element(L, e) << " (" << e.block_count() << " blocks)\n";
  std::cout << "distributive: " << yes(dist.distributive) << "\n";
  if (dist.witness) {
    std::cout << "witness:";
    for (const auto& p : *dist.witness) std::cout << " [" << describe_element(L, p) << "]";
    std::cout << "\n";
  }
  return 0;
}

int print_sweep(const SweepReport& r, const std::string& label, bool json) {
  if (json) {
    ordered_json j;
    j["family"] = label;
    j["structures"] = r.structures;
    j["items"] = ordered_json::array();
    for (const auto& it : r.items) {
      ordered_json e{{"id", it.id}, {"disagreements", it.disagreements}};
      if (it.witness) e["witness"] = ordered_json::parse(it.witness->to_json());
      j["items"].push_back(e);
    }
    j["all_agree"] = r.all_agree();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << label << ": " << r.structures << " structures\n";
  auto find = [](const std::string& id) -> const CorrespondenceItem* {
    for (const auto& it : correspondence_items())
      if (it.id == id) return &it;
    for (const auto& it : alternate_items())
      if (it.id == id) return &it;
    return nullptr;
  };
  for (const auto& it : r.items) {
    const auto* item = find(it.id);
    std::cout << "  " << it.id << "  " << condition_name(item->condition) << "  " << to_string(item->axiom) << "  "
              << (it.disagreements ? "DISAGREE x" + std::to_string(it.disagreements) : "agree") << "\n";
    if (it.witness) std::cout << "      first witness: " << it.witness->to_string() << "\n";
  }
  std::cout << "stated pairs all agree: " << yes(r.all_agree()) << "\n";
  return 0;
}

ordered_json equivalence_json(const EquivalenceReport& e) {
  ordered_json j{{"agree", e.agree},
                 {"ia_terms", e.ia_terms},
                 {"c_terms", e.c_terms},
                 {"sequents", e.sequents},
                 {"disagreements", e.disagreements}};
  if (e.first) j["first"] = {{"sequent", to_string(*e.first)}, {"source_valid", e.lhs_valid}, {"target_valid", e.rhs_valid}};
  return j;
}

int run_frames(int number, const std::string& file, int depth, bool json) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::Validation, "cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto F = RelationalStructure::from_json(ss.str());
    auto A = complex_algebra(F);
    ordered_json j;
    j["structure"] = F.to_string();
    for (auto c : all_conditions()) j["conditions"][condition_name(c)] = check_condition(F, c);
    for (const auto& it : correspondence_items()) {
      auto r = correspondence_pair(F, A, it);
      j["pairs"].push_back({{"id", it.id}, {"condition", condition_name(it.condition)}, {"axiom", to_string(it.axiom)},
                            {"fo", r.fo}, {"valid", r.axiom}, {"agree", r.agree()}});
    }
    if (json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << F.to_string() << "\n";
      for (auto c : all_conditions()) std::cout << "  " << condition_name(c) << ": " << yes(check_condition(F, c)) << "\n";
      for (const auto& p : j["pairs"])
        std::cout << "  pair " << p["id"].get<std::string>() << ": condition " << yes(p["fo"].get<bool>()) << ", axiom "
                  << yes(p["valid"].get<bool>()) << (p["agree"].get<bool>() ? "" : "  DISAGREE") << "\n";
    }
    return 0;
  }
  auto fx = gt_fixture(number);
  auto r = check_fixture(fx, depth, 1);
  if (json) {
    ordered_json j;
    j["case"] = fx.number;
    j["kind"] = fx.kind == FixtureKind::Morphism ? "morphism" : "union";
    j["partial"] = fx.partial;
    j["condition"] = condition_name(fx.condition);
    j["sources"] = ordered_json::array();
    for (std::size_t k = 0; k < fx.sources.size(); ++k)
      j["sources"].push_back({{"structure", fx.sources[k].to_string()}, {"verdict", static_cast<bool>(r.source_verdicts[k])},
                              {"expected", fx.expected_source}});
    j["target"] = {{"structure", fx.target.to_string()}, {"verdict", r.target_verdict}, {"expected", fx.expected_target}};
    j["verdicts_match"] = r.verdicts_match;
    if (r.forth)
      j["forth"] = {{"surjective", r.forth->surjective}, {"I", r.forth->forth_I}, {"R", r.forth->forth_R}, {"S", r.forth->forth_S}};
    if (r.equivalence) j["equivalence"] = equivalence_json(*r.equivalence);
    j["passed"] = r.passed();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "case " << fx.number << " (" << (fx.kind == FixtureKind::Morphism ? "bounded morphism" : "disjoint union")
            << (fx.partial ? ", target only" : "") << "), condition " << condition_name(fx.condition) << "\n";
  for (std::size_t k = 0; k < fx.sources.size(); ++k)
    std::cout << "  source " << k + 1 << ": " << fx.sources[k].to_string() << "\n    holds: " << yes(r.source_verdicts[k])
              << " (expected " << yes(fx.expected_source) << ")\n";
  std::cout << "  target: " << fx.target.to_string() << "\n    holds: " << yes(r.target_verdict) << " (expected "
            << yes(fx.expected_target) << ")\n";
  if (r.forth)
    std::cout << "  map: surjective " << yes(r.forth->surjective) << ", forth I " << yes(r.forth->forth_I) << ", R "
              << yes(r.forth->forth_R) << ", S " << yes(r.forth->forth_S) << "\n";
  if (r.equivalence) {
    const auto& e = *r.equivalence;
    std::cout << "  depth-" << depth << " sequents: " << e.sequents << " over " << e.c_terms << " C-terms and " << e.ia_terms
              << " IA-terms, " << e.disagreements << " disagreements\n";
    if (e.first)
      std::cout << "    first: " << to_string(*e.first) << "  source " << (e.lhs_valid ? "valid" : "invalid") << ", target "
                << (e.rhs_valid ? "valid" : "invalid") << "\n";
  }
  std::cout << "  result: " << (r.passed() ? "consistent with the claim" : "claim not reproduced") << "\n";
  return 0;
}

int run_decompose(const std::string& file, const std::string& set, bool json) {
  auto s = load_scenario_file(file);
  auto space = scenario_space(s);
  auto Y = sorted_names(split(set, ','));
  auto whole = sum_agenda(space, Y);
  auto parts = thresholds(space, Y);
  const bool ok = sum_decomposition_check(space, Y);
  if (json) {
    ordered_json j;
    j["set"] = Y;
    j["sum_agenda"] = {{"descriptor", describe(whole.descriptor)}, {"blocks", whole.partition.block_count()}};
    j["thresholds"] = ordered_json::array();
    for (const auto& t : parts) j["thresholds"].push_back({{"id", issue_id(t.descriptor)}, {"blocks", t.partition.block_count()}});
    j["meet_equals_sum_agenda"] = ok;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << describe(whole.descriptor) << " (" << whole.partition.block_count() << " blocks)\n";
  for (const auto& t : parts) std::cout << "  " << issue_id(t.descriptor) << "\n";
  std::cout << "meet of thresholds equals the sum agenda: " << yes(ok) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interrogative agendas: partition lattices, deliberation analysis, correspondence checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string scenario_file;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a deliberation scenario");
  analyze_cmd->add_option("file", scenario_file, "scenario JSON")->required();

  LatticeArgs la;
  auto* lattice_cmd = app.add_subcommand("lattice", "materialize an agenda lattice");
  auto* p_opt = lattice_cmd->add_option("--params", la.params, "comma-separated binary parameters");
  auto* i_opt = lattice_cmd->add_option("--issues", la.issues, "semicolon-separated issue ids");
  lattice_cmd->add_option("--ground", la.ground, "partition lattice E(W) on n points");
  lattice_cmd->add_option("--rule", la.rule, "total or sum")->check(CLI::IsMember({"total", "sum"}));
  lattice_cmd->add_flag("--dot", la.dot, "emit DOT");
  lattice_cmd->add_flag("--poset", la.poset, "emit the profile poset as DOT");
  p_opt->excludes(i_opt);

  std::size_t exhaustive = 0, random = 0, size = 3;
  std::uint64_t seed = 1;
  auto* corr_cmd = app.add_subcommand("check-correspondence", "compare frame conditions with their axioms");
  auto* ex_opt = corr_cmd->add_option("--exhaustive", exhaustive, "all structures with |C|,|D| <= n");
  auto* rnd_opt = corr_cmd->add_option("--random", random, "number of random structures");
  corr_cmd->add_option("--seed", seed, "random seed");
  corr_cmd->add_option("--size", size, "|C| = |D| for random structures");
  ex_opt->excludes(rnd_opt);

  int fixture = 0, depth = 2;
  std::string frame_file;
  auto* frames_cmd = app.add_subcommand("frames", "non-definability fixtures and frame reports");
  auto* fx_opt = frames_cmd->add_option("--fixture", fixture, "case 1..8")->check(CLI::Range(1, 8));
  auto* ff_opt = frames_cmd->add_option("--file", frame_file, "frame JSON");
  frames_cmd->add_option("--depth", depth, "term depth")->check(CLI::Range(0, 2));
  fx_opt->excludes(ff_opt);

  std::string decompose_file, decompose_set;
  auto* dec_cmd = app.add_subcommand("decompose", "threshold decomposition of a sum agenda");
  dec_cmd->add_option("--scenario", decompose_file, "scenario JSON")->required();
  dec_cmd->add_option("--set", decompose_set, "comma-separated parameters")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return run_analyze(scenario_file, json);
    if (*lattice_cmd) return run_lattice(la, json);
    if (*corr_cmd) {
      if (random) return print_sweep(random_sweep(size, size, random, seed), "random " + std::to_string(size) + "x" + std::to_string(size), json);
      const std::size_t n = exhaustive ? exhaustive : 2;
      return print_sweep(exhaustive_sweep(n, n), "exhaustive |C|,|D| <= " + std::to_string(n), json);
    }
    if (*frames_cmd) {
      if (!fixture && frame_file.empty()) throw Error(ErrorKind::Validation, "give --fixture or --file");
      return run_frames(fixture, frame_file, depth, json);
    }
    if (*dec_cmd) return run_decompose(decompose_file, decompose_set, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
