#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "agenda/agenda_lattice.hpp"
#include "agenda/coalition.hpp"

namespace agenda {

struct HeteroStructure {
  AgentSet agents;
  AgendaLattice lattice;
  InfluenceRelation I;
  std::vector<GenSet> relevant;            // relevant[j] = R^{-1}[j]
  std::vector<std::vector<GenSet>> subst;  // subst[j][m] = {n : S(n, j, m)}

  std::size_t agent_count() const { return agents.size(); }
  std::size_t issue_count() const { return lattice.generator_count(); }
};

using RelevancePairs = std::vector<std::pair<std::string, std::string>>;                     // (issue id, agent)
using SubstitutionTriples = std::vector<std::tuple<std::string, std::string, std::string>>;  // (n, agent, m)

HeteroStructure make_hetero(AgentSet agents, AgendaLattice lattice, InfluenceRelation I, const RelevancePairs& R,
                            const SubstitutionTriples& S);

Partition agent_agenda(const HeteroStructure& H, std::size_t j);  // diamond j = meet R^{-1}[j]
Partition common_agenda(const HeteroStructure& H, Coalition c);
Partition distributed_agenda(const HeteroStructure& H, Coalition c);
Partition box_coalition(const HeteroStructure& H, Coalition c);
Coalition blacksquare(const HeteroStructure& H, const Partition& e);
Coalition blacktriangleright(const HeteroStructure& H, const Partition& e);

Partition substitute(const HeteroStructure& H, std::size_t j, std::size_t m);  // j -< m
Partition subst_transform(const HeteroStructure& H, Coalition c, const Partition& e);
Coalition star(const HeteroStructure& H, const Partition& e1, const Partition& e2);
Partition residual_second(const HeteroStructure& H, Coalition c, const Partition& e);
Partition br_transform(const HeteroStructure& H, Coalition c, const Partition& e);
Coalition brB(const HeteroStructure& H, const Partition& e1, const Partition& e2);
Partition vartriangle(const HeteroStructure& H, Coalition c, const Partition& e);

bool is_boolean(const AgendaLattice& lattice);
// every generator m: x & y <= m implies x <= m or y <= m, over the materialized lattice
bool generators_meet_prime(const AgendaLattice& lattice);

}  // namespace agenda
