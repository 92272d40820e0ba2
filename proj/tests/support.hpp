#pragma once

#include <functional>
#include <random>
#include <string>

#include "agenda/error.hpp"
#include "agenda/hetero.hpp"
#include "agenda/scenario.hpp"

namespace support {

inline agenda::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const agenda::Error& e) {
    return e.kind();
  }
  return agenda::ErrorKind::Invariant;
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline agenda::ScenarioModel model(const std::string& name) {
  return agenda::build_model(agenda::load_scenario_file(fixture(name)));
}

inline agenda::Partition gen(const agenda::HeteroStructure& H, const std::string& id) {
  return H.lattice.generator(*H.lattice.issues().index_of(id));
}

// 1..3 agents over the Boolean projection lattice of three binary parameters, or over
// the non-distributive threshold lattice of two; I, R, S drawn independently
inline agenda::HeteroStructure random_structure(std::mt19937_64& rng, bool boolean) {
  using namespace agenda;
  auto space = binary_space(boolean ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"});
  auto L = build_lattice(boolean ? projection_issues(space) : all_threshold_issues(space));
  std::uniform_int_distribution<std::size_t> na(1, 3);
  std::size_t n = na(rng);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back(std::string(1, char('a' + j)));
  std::bernoulli_distribution coin(0.4);
  InfluenceRelation I(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) I.add(i, j);
  RelevancePairs R;
  SubstitutionTriples S;
  const auto& ids = L.issues().issues();
  for (const auto& is : ids)
    for (const auto& a : names) {
      if (coin(rng)) R.push_back({is.id, a});
      for (const auto& m : ids)
        if (coin(rng)) S.push_back({is.id, a, m.id});
    }
  return make_hetero(AgentSet(names), std::move(L), std::move(I), R, S);
}

}  // namespace support
