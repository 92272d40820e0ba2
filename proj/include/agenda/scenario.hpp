#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agenda/hetero.hpp"

namespace agenda {

struct SubstitutionEntry {
  std::string agent, from, to;  // S(to, agent, from)
};

struct NamedAgendaSpec {
  enum class Kind { Params, Sum, Issues };
  std::string name;
  Kind kind = Kind::Params;
  std::vector<std::string> items;
};

struct ScenarioOptions {
  bool candidate_set = true;
  std::size_t crs_rounds = 1;
  std::vector<NamedAgendaSpec> agendas;
  std::size_t max_profiles = 4096, max_generators = 20, max_elements = 4096;
};

struct Scenario {
  std::vector<std::string> agents;
  std::vector<Parameter> parameters;
  Rule rule = Rule::TotalDominance;
  std::vector<std::pair<std::string, std::vector<std::string>>> candidates;  // value label per parameter
  std::vector<std::vector<std::string>> relevance;                           // issue ids per agent
  std::vector<std::pair<std::string, std::string>> influence;
  std::vector<SubstitutionEntry> substitution;
  ScenarioOptions options;
};

Scenario load_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);
std::string serialize(const Scenario& s);

FeatureSpace scenario_space(const Scenario& s);
// "param:x", "sum:Y<=k", "sumset:Y"; bare parameter names under total dominance
std::vector<Issue> resolve_issue(const FeatureSpace& space, Rule rule, const std::string& id);

struct ScenarioModel {
  FeatureSpace space;
  HeteroStructure H;
  std::size_t first = 0, second = 0;  // profile ids of the two candidates
};

ScenarioModel build_model(const Scenario& s);

// shortest list of generator ids whose meet is p
std::string describe_element(const AgendaLattice& L, const Partition& p);

struct AgendaReport {
  std::string name;
  std::string descriptor;
  Partition partition;
  Verdict verdict = Verdict::NoDecision;
};

struct DeliberationReport {
  std::string first, second;
  Rule rule = Rule::TotalDominance;
  std::size_t generators = 0, elements = 0;
  std::vector<AgendaReport> agents;
  AgendaReport common, distributed, aggregate;
  std::optional<std::vector<AgendaReport>> candidate_set;
  std::vector<AgendaReport> named;
};

DeliberationReport analyze(const Scenario& s);
DeliberationReport analyze(const Scenario& s, const ScenarioModel& m);

std::string verdict_text(Verdict v, const std::string& first, const std::string& second);
std::string report_json(const DeliberationReport& r, const FeatureSpace& space);
std::string report_text(const DeliberationReport& r);

}  // namespace agenda
