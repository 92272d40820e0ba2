#include "agenda/scenario.hpp"

#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "agenda/error.hpp"

namespace agenda {

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

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

Scale parse_scale(const ordered_json& j) {
  const auto kind = j.at("kind").get<std::string>();
  auto values = j.at("values").get<std::vector<std::string>>();
  std::map<std::string, Rational> numeric;
  if (j.contains("numeric"))
    for (const auto& [k, v] : j.at("numeric").items()) numeric[k] = parse_rational(v.get<std::string>());
  if (kind == "chain") {
    if (numeric.empty()) return Scale::chain(values);
    std::vector<Rational> nums;
    for (const auto& v : values) {
      auto it = numeric.find(v);
      if (it == numeric.end()) throw Error(ErrorKind::MalformedScale, "numeric value missing for " + v);
      nums.push_back(it->second);
    }
    return Scale::chain(values, nums);
  }
  if (kind == "poset") {
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.value("covers", ordered_json::array()))
      covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    std::vector<std::optional<Rational>> nums;
    for (const auto& v : values) {
      auto it = numeric.find(v);
      nums.push_back(it == numeric.end() ? std::optional<Rational>{} : std::optional<Rational>{it->second});
    }
    return Scale::poset(values, covers, nums);
  }
  throw Error(ErrorKind::MalformedScale, "scale kind must be chain or poset");
}

ordered_json scale_json(const Scale& s) {
  ordered_json j;
  j["kind"] = s.kind() == ScaleKind::Chain ? "chain" : "poset";
  j["values"] = s.labels();
  if (s.kind() == ScaleKind::Poset) {
    ordered_json covers = ordered_json::array();
    for (const auto& [a, b] : s.covers()) covers.push_back({s.label(a), s.label(b)});
    j["covers"] = covers;
  }
  ordered_json numeric = ordered_json::object();
  bool needed = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& n = s.numeric(i);
    if (!n) continue;
    numeric[s.label(i)] = format_rational(*n);
    auto parsed = try_parse_rational(s.label(i));
    if (!parsed || *parsed != *n) needed = true;
  }
  if (needed || (s.kind() == ScaleKind::Poset && !numeric.empty())) j["numeric"] = numeric;
  return j;
}

}  // namespace

std::vector<Issue> resolve_issue(const FeatureSpace& space, Rule rule, const std::string& id) {
  if (starts_with(id, "param:")) {
    auto name = id.substr(6);
    space.param_index(name);
    return {{id, projection_agenda(space, {name})}};
  }
  if (starts_with(id, "sumset:")) {
    auto Y = split(id.substr(7), ',');
    if (Y.empty()) throw Error(ErrorKind::EmptyAgendaSet, id);
    std::vector<Issue> out;
    for (auto& t : thresholds(space, Y)) out.push_back({issue_id(t.descriptor), t});
    return out;
  }
  if (starts_with(id, "sum:")) {
    auto body = id.substr(4);
    auto pos = body.find("<=");
    if (pos == std::string::npos) throw Error(ErrorKind::Validation, "malformed issue id " + id);
    auto Y = split(body.substr(0, pos), ',');
    if (Y.empty()) throw Error(ErrorKind::EmptyAgendaSet, id);
    auto k = try_parse_rational(body.substr(pos + 2));
    if (!k) throw Error(ErrorKind::Validation, "malformed threshold in " + id);
    auto t = threshold_issue(space, Y, *k);
    return {{issue_id(t.descriptor), t}};
  }
  if (rule == Rule::TotalDominance) {
    space.param_index(id);
    return {{"param:" + id, projection_agenda(space, {id})}};
  }
  throw Error(ErrorKind::Validation, "unknown issue id " + id);
}

namespace {

void validate(const Scenario& s) {
  std::vector<std::string> errors;
  auto err = [&](std::string m) { errors.push_back(std::move(m)); };
  std::set<std::string> agents(s.agents.begin(), s.agents.end());
  if (s.agents.empty()) err("no agents");
  if (agents.size() != s.agents.size()) err("duplicate agent names");
  std::set<std::string> pnames;
  for (const auto& p : s.parameters)
    if (!pnames.insert(p.name).second) err("duplicate parameter " + p.name);
  if (s.rule == Rule::Sum)
    for (const auto& p : s.parameters)
      if (p.scale.kind() != ScaleKind::Chain || !p.scale.fully_numeric())
        err("sum rule needs numeric chain scale for " + p.name);
  if (s.candidates.size() != 2) err("exactly two candidates are required");
  for (const auto& [name, vals] : s.candidates)
    for (std::size_t i = 0; i < vals.size() && i < s.parameters.size(); ++i)
      if (!s.parameters[i].scale.index_of(vals[i]))
        err("candidate " + name + ": value " + vals[i] + " not in scale of " + s.parameters[i].name);
  for (const auto& [a, b] : s.influence) {
    if (!agents.count(a)) err("unknown agent " + a + " in influence");
    if (!agents.count(b)) err("unknown agent " + b + " in influence");
  }
  for (const auto& e : s.substitution)
    if (!agents.count(e.agent)) err("unknown agent " + e.agent + " in substitution");
  for (const auto& a : s.options.agendas)
    if (a.kind == NamedAgendaSpec::Kind::Params && s.rule == Rule::Sum)
      err("agenda " + a.name + ": projection agendas need the total dominance rule");
  auto fail = [&] {
    if (errors.empty()) return;
    std::string msg;
    for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
    throw Error(ErrorKind::Validation, msg);
  };
  fail();
  // ids resolve against the space; cap errors propagate unchanged
  auto space = scenario_space(s);
  auto check = [&](const std::string& where, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      if (exit_code(e.kind()) != 1) throw;
      err(where + ": " + e.what());
    }
  };
  for (std::size_t a = 0; a < s.relevance.size(); ++a)
    for (const auto& id : s.relevance[a]) check("relevance of " + s.agents[a], [&] { resolve_issue(space, s.rule, id); });
  for (const auto& e : s.substitution)
    check("substitution of " + e.agent, [&] {
      if (resolve_issue(space, s.rule, e.from).size() != 1 || resolve_issue(space, s.rule, e.to).size() != 1)
        throw Error(ErrorKind::Validation, "entries need single issues");
    });
  for (const auto& a : s.options.agendas)
    check("agenda " + a.name, [&] {
      if (a.kind == NamedAgendaSpec::Kind::Issues)
        for (const auto& id : a.items) resolve_issue(space, s.rule, id);
      else
        space.param_indices(a.items);
    });
  fail();
}

}  // namespace

Scenario load_scenario(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  Scenario s;
  try {
    s.agents = j.at("agents").get<std::vector<std::string>>();
    for (const auto& p : j.at("parameters")) s.parameters.push_back({p.at("name").get<std::string>(), parse_scale(p.at("scale"))});
    const auto rule = j.at("winning_rule").get<std::string>();
    if (rule == "total_dominance")
      s.rule = Rule::TotalDominance;
    else if (rule == "sum")
      s.rule = Rule::Sum;
    else
      throw Error(ErrorKind::Validation, "winning_rule must be total_dominance or sum");
    for (const auto& [name, vals] : j.at("candidates").items()) {
      std::vector<std::string> row;
      for (const auto& p : s.parameters) {
        if (!vals.contains(p.name)) throw Error(ErrorKind::Validation, "candidate " + name + " lacks parameter " + p.name);
        row.push_back(vals.at(p.name).get<std::string>());
      }
      for (const auto& [k, v] : vals.items()) {
        bool known = false;
        for (const auto& p : s.parameters) known = known || p.name == k;
        if (!known) throw Error(ErrorKind::Validation, "candidate " + name + ": unknown parameter " + k);
      }
      s.candidates.emplace_back(name, row);
    }
    s.relevance.assign(s.agents.size(), {});
    if (j.contains("relevance"))
      for (const auto& [agent, ids] : j.at("relevance").items()) {
        auto it = std::find(s.agents.begin(), s.agents.end(), agent);
        if (it == s.agents.end()) throw Error(ErrorKind::Validation, "unknown agent " + agent + " in relevance");
        s.relevance[static_cast<std::size_t>(it - s.agents.begin())] = ids.get<std::vector<std::string>>();
      }
    for (const auto& p : j.value("influence", ordered_json::array()))
      s.influence.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    for (const auto& e : j.value("substitution", ordered_json::array()))
      s.substitution.push_back({e.at("agent").get<std::string>(), e.at("from").get<std::string>(), e.at("to").get<std::string>()});
    if (j.contains("options")) {
      const auto& o = j.at("options");
      s.options.candidate_set = o.value("candidate_set", true);
      s.options.crs_rounds = o.value("crs_rounds", std::size_t{1});
      s.options.max_profiles = o.value("max_profiles", std::size_t{4096});
      s.options.max_generators = o.value("max_generators", std::size_t{20});
      s.options.max_elements = o.value("max_elements", std::size_t{4096});
      for (const auto& a : o.value("agendas", ordered_json::array())) {
        NamedAgendaSpec spec;
        spec.name = a.at("name").get<std::string>();
        if (a.contains("params")) {
          spec.kind = NamedAgendaSpec::Kind::Params;
          spec.items = a.at("params").get<std::vector<std::string>>();
        } else if (a.contains("sum")) {
          spec.kind = NamedAgendaSpec::Kind::Sum;
          spec.items = a.at("sum").get<std::vector<std::string>>();
        } else if (a.contains("issues")) {
          spec.kind = NamedAgendaSpec::Kind::Issues;
          spec.items = a.at("issues").get<std::vector<std::string>>();
        } else {
          throw Error(ErrorKind::Validation, "agenda " + spec.name + " needs params, sum or issues");
        }
        s.options.agendas.push_back(std::move(spec));
      }
    }
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorKind::Validation, e.what());
  }
  validate(s);
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Validation, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scenario(ss.str());
}

std::string serialize(const Scenario& s) {
  ordered_json j;
  j["agents"] = s.agents;
  j["parameters"] = ordered_json::array();
  for (const auto& p : s.parameters) j["parameters"].push_back({{"name", p.name}, {"scale", scale_json(p.scale)}});
  j["winning_rule"] = s.rule == Rule::Sum ? "sum" : "total_dominance";
  j["candidates"] = ordered_json::object();
  for (const auto& [name, vals] : s.candidates) {
    ordered_json c = ordered_json::object();
    for (std::size_t i = 0; i < vals.size(); ++i) c[s.parameters[i].name] = vals[i];
    j["candidates"][name] = c;
  }
  j["relevance"] = ordered_json::object();
  for (std::size_t a = 0; a < s.agents.size(); ++a) j["relevance"][s.agents[a]] = s.relevance[a];
  j["influence"] = ordered_json::array();
  for (const auto& [a, b] : s.influence) j["influence"].push_back({a, b});
  j["substitution"] = ordered_json::array();
  for (const auto& e : s.substitution) j["substitution"].push_back({{"agent", e.agent}, {"from", e.from}, {"to", e.to}});
  ordered_json o;
  o["candidate_set"] = s.options.candidate_set;
  o["crs_rounds"] = s.options.crs_rounds;
  o["max_profiles"] = s.options.max_profiles;
  o["max_generators"] = s.options.max_generators;
  o["max_elements"] = s.options.max_elements;
  o["agendas"] = ordered_json::array();
  for (const auto& a : s.options.agendas) {
    const char* key = a.kind == NamedAgendaSpec::Kind::Params ? "params" : a.kind == NamedAgendaSpec::Kind::Sum ? "sum" : "issues";
    o["agendas"].push_back({{"name", a.name}, {key, a.items}});
  }
  j["options"] = o;
  return j.dump(2);
}

FeatureSpace scenario_space(const Scenario& s) { return build_space(s.parameters, s.options.max_profiles); }

ScenarioModel build_model(const Scenario& s) {
  auto space = scenario_space(s);
  std::vector<Issue> gens;
  std::set<std::string> seen;
  auto add = [&](const std::string& id) {
    for (auto& is : resolve_issue(space, s.rule, id))
      if (seen.insert(is.id).second) gens.push_back(std::move(is));
  };
  RelevancePairs R;
  for (std::size_t a = 0; a < s.agents.size(); ++a)
    for (const auto& id : s.relevance[a]) {
      add(id);
      for (const auto& is : resolve_issue(space, s.rule, id)) R.emplace_back(is.id, s.agents[a]);
    }
  SubstitutionTriples S;
  for (const auto& e : s.substitution) {
    add(e.from);
    add(e.to);
    S.emplace_back(resolve_issue(space, s.rule, e.to)[0].id, e.agent, resolve_issue(space, s.rule, e.from)[0].id);
  }
  if (gens.empty()) throw Error(ErrorKind::Validation, "scenario references no issues");
  AgentSet agents(s.agents);
  auto I = InfluenceRelation::from_names(agents, s.influence);
  auto L = build_lattice(IssueSet(std::move(gens)), s.options.max_generators, s.options.max_elements);
  auto profile_of = [&](const std::vector<std::string>& vals) {
    Profile p;
    for (std::size_t i = 0; i < vals.size(); ++i) p.push_back(*s.parameters[i].scale.index_of(vals[i]));
    return space.index_of(p);
  };
  ScenarioModel m{space, make_hetero(std::move(agents), std::move(L), std::move(I), R, S), 0, 0};
  m.first = profile_of(s.candidates.at(0).second);
  m.second = profile_of(s.candidates.at(1).second);
  return m;
}

std::string describe_element(const AgendaLattice& L, const Partition& p) {
  auto gens = L.above(p);
  if (gens.none()) return "tau";
  GenSet keep = gens;
  for (auto m = gens.find_first(); m != GenSet::npos; m = gens.find_next(m)) {
    keep.reset(m);
    if (!(L.meet_of(keep) == p)) keep.set(m);
  }
  std::string out;
  for (auto m = keep.find_first(); m != GenSet::npos; m = keep.find_next(m))
    out += (out.empty() ? "" : " & ") + L.issues()[m].id;
  return out;
}

namespace {

AgendaReport element_report(const ScenarioModel& m, Rule rule, std::string name, const Partition& p) {
  auto ag = m.H.lattice.as_agenda(p);
  return {std::move(name), describe_element(m.H.lattice, p), p, decide(m.space, rule, ag, m.first, m.second)};
}

}  // namespace

DeliberationReport analyze(const Scenario& s) { return analyze(s, build_model(s)); }

DeliberationReport analyze(const Scenario& s, const ScenarioModel& m) {
  DeliberationReport r;
  r.first = s.candidates.at(0).first;
  r.second = s.candidates.at(1).first;
  r.rule = s.rule;
  r.generators = m.H.lattice.generator_count();
  r.elements = m.H.lattice.materialized() ? m.H.lattice.elements().size() : 0;
  const std::size_t n = s.agents.size();
  for (std::size_t j = 0; j < n; ++j) r.agents.push_back(element_report(m, s.rule, s.agents[j], agent_agenda(m.H, j)));
  const auto all = Coalition::all(n);
  r.common = element_report(m, s.rule, "common", common_agenda(m.H, all));
  r.distributed = element_report(m, s.rule, "distributed", distributed_agenda(m.H, all));
  Partition agg = m.H.lattice.top();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) agg = meet(agg, subst_transform(m.H, Coalition::single(i), agent_agenda(m.H, j)));
  r.aggregate = element_report(m, s.rule, "aggregate", agg);

  if (s.rule == Rule::TotalDominance && s.options.candidate_set && n >= 2) {
    std::vector<std::vector<std::string>> params;
    bool projections = true;
    for (const auto& ids : s.relevance) {
      std::vector<std::string> Y;
      for (const auto& id : ids)
        for (const auto& is : resolve_issue(m.space, s.rule, id)) {
          auto d = std::get_if<ProjectionDescriptor>(&is.agenda.descriptor);
          if (!d) projections = false;
          else Y.insert(Y.end(), d->Y.begin(), d->Y.end());
        }
      if (Y.empty()) projections = false;
      params.push_back(Y);
    }
    if (projections) {
      std::vector<AgendaReport> cs;
      for (const auto& ag : candidate_set_C(m.space, params, s.options.crs_rounds))
        cs.push_back({describe(ag.descriptor), describe(ag.descriptor), ag.partition,
                      decide(m.space, s.rule, ag, m.first, m.second)});
      r.candidate_set = std::move(cs);
    }
  }

  for (const auto& spec : s.options.agendas) {
    Agenda ag{Partition::top(m.space.size()), Opaque{}};
    switch (spec.kind) {
      case NamedAgendaSpec::Kind::Params: ag = projection_agenda(m.space, spec.items); break;
      case NamedAgendaSpec::Kind::Sum: ag = sum_agenda(m.space, spec.items); break;
      case NamedAgendaSpec::Kind::Issues: {
        MeetOfIssues d;
        for (const auto& id : spec.items)
          for (const auto& is : resolve_issue(m.space, s.rule, id)) {
            ag.partition = meet(ag.partition, is.agenda.partition);
            d.ids.push_back(is.id);
          }
        ag.descriptor = d;
        break;
      }
    }
    r.named.push_back({spec.name, describe(ag.descriptor), ag.partition, decide(m.space, s.rule, ag, m.first, m.second)});
  }
  return r;
}

std::string verdict_text(Verdict v, const std::string& first, const std::string& second) {
  switch (v) {
    case Verdict::PrefersFirst: return first;
    case Verdict::PrefersSecond: return second;
    case Verdict::Tie: return "Tie";
    case Verdict::NoDecision: return "NoDecision";
  }
  return "?";
}

std::string report_json(const DeliberationReport& r, const FeatureSpace& space) {
  auto ag = [&](const AgendaReport& a) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : a.partition.blocks()) {
      ordered_json block = ordered_json::array();
      for (auto w : b) block.push_back(space.profile_label(w));
      blocks.push_back(block);
    }
    return ordered_json{{"name", a.name},
                        {"descriptor", a.descriptor},
                        {"blocks", a.partition.block_count()},
                        {"partition", blocks},
                        {"verdict", verdict_text(a.verdict, r.first, r.second)}};
  };
  ordered_json j;
  j["candidates"] = {r.first, r.second};
  j["winning_rule"] = r.rule == Rule::Sum ? "sum" : "total_dominance";
  j["generators"] = r.generators;
  j["elements"] = r.elements;
  j["agents"] = ordered_json::array();
  for (const auto& a : r.agents) j["agents"].push_back(ag(a));
  j["common"] = ag(r.common);
  j["distributed"] = ag(r.distributed);
  j["aggregate"] = ag(r.aggregate);
  if (r.candidate_set) {
    j["candidate_set"] = ordered_json::array();
    for (const auto& a : *r.candidate_set) j["candidate_set"].push_back(ag(a));
  }
  j["named"] = ordered_json::array();
  for (const auto& a : r.named) j["named"].push_back(ag(a));
  return j.dump(2);
}

std::string report_text(const DeliberationReport& r) {
  std::ostringstream os;
  auto line = [&](const std::string& label, const AgendaReport& a) {
    os << "  " << label << ": " << a.descriptor << " (" << a.partition.block_count() << " blocks) -> "
       << verdict_text(a.verdict, r.first, r.second) << "\n";
  };
  os << "candidates: " << r.first << " vs " << r.second << "  rule: " << to_string(r.rule) << "\n";
  os << "agenda lattice: " << r.generators << " generators, " << r.elements << " elements\n";
  os << "agents:\n";
  for (const auto& a : r.agents) line(a.name, a);
  os << "coalition of all agents:\n";
  line("common", r.common);
  line("distributed", r.distributed);
  line("aggregate", r.aggregate);
  if (r.candidate_set) {
    os << "candidate set:\n";
    for (const auto& a : *r.candidate_set) line(a.name, a);
  }
  if (!r.named.empty()) {
    os << "named agendas:\n";
    for (const auto& a : r.named) line(a.name, a);
  }
  return os.str();
}

}  // namespace agenda
