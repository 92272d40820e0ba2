#include "agenda/hetero.hpp"

#include "agenda/error.hpp"

namespace agenda {

HeteroStructure make_hetero(AgentSet agents, AgendaLattice lattice, InfluenceRelation I, const RelevancePairs& R,
                            const SubstitutionTriples& S) {
  HeteroStructure H{std::move(agents), std::move(lattice), std::move(I), {}, {}};
  const std::size_t n = H.agents.size(), g = H.lattice.generator_count();
  if (H.I.agents() != n) throw Error(ErrorKind::Validation, "influence relation over a different agent set");
  auto issue = [&](const std::string& id) {
    auto m = H.lattice.issues().index_of(id);
    if (!m) throw Error(ErrorKind::Validation, "dangling issue id " + id);
    return *m;
  };
  H.relevant.assign(n, GenSet(g));
  H.subst.assign(n, std::vector<GenSet>(g, GenSet(g)));
  for (const auto& [m, j] : R) H.relevant[H.agents.index_of(j)].set(issue(m));
  for (const auto& [nn, j, m] : S) H.subst[H.agents.index_of(j)][issue(m)].set(issue(nn));
  return H;
}

Partition agent_agenda(const HeteroStructure& H, std::size_t j) { return H.lattice.meet_of(H.relevant.at(j)); }

Partition common_agenda(const HeteroStructure& H, Coalition c) {
  std::vector<Partition> parts;
  for (std::size_t j = 0; j < H.agent_count(); ++j)
    if (c.has(j)) parts.push_back(agent_agenda(H, j));
  return d_join(H.lattice, parts);
}

Partition distributed_agenda(const HeteroStructure& H, Coalition c) {
  Partition acc = H.lattice.top();
  for (std::size_t j = 0; j < H.agent_count(); ++j)
    if (c.has(j)) acc = meet(acc, agent_agenda(H, j));
  return acc;
}

bool is_boolean(const AgendaLattice& lattice) {
  if (!is_distributive(lattice).distributive) return false;
  const auto& els = lattice.elements();
  const Partition bot = lattice.bottom(), top = lattice.top();
  for (const auto& x : els) {
    bool found = false;
    for (const auto& y : els)
      if (meet(x, y) == bot && d_join(lattice, {x, y}) == top) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

Partition box_coalition(const HeteroStructure& H, Coalition c) {
  if (!is_boolean(H.lattice)) throw Error(ErrorKind::NotBoolean, "box needs a Boolean agenda lattice");
  GenSet gens(H.issue_count());
  for (std::size_t j = 0; j < H.agent_count(); ++j) {
    if (c.has(j)) continue;
    auto dj = agent_agenda(H, j);
    for (std::size_t m = 0; m < H.issue_count(); ++m)
      if (!refines(dj, H.lattice.generator(m))) gens.set(m);
  }
  return H.lattice.meet_of(gens);
}

Coalition blacksquare(const HeteroStructure& H, const Partition& e) {
  H.lattice.require(e);
  Coalition r;
  for (std::size_t j = 0; j < H.agent_count(); ++j)
    if (refines(agent_agenda(H, j), e)) r = r | Coalition::single(j);
  return r;
}

Coalition blacktriangleright(const HeteroStructure& H, const Partition& e) {
  H.lattice.require(e);
  Coalition r;
  for (std::size_t j = 0; j < H.agent_count(); ++j)
    if (refines(e, agent_agenda(H, j))) r = r | Coalition::single(j);
  return r;
}

Partition substitute(const HeteroStructure& H, std::size_t j, std::size_t m) {
  return H.lattice.meet_of(H.subst.at(j).at(m));
}

Partition subst_transform(const HeteroStructure& H, Coalition c, const Partition& e) {
  H.lattice.require(e);
  auto above = H.lattice.above(e);
  std::vector<Partition> parts;
  for (std::size_t j = 0; j < H.agent_count(); ++j) {
    if (!c.has(j)) continue;
    for (auto m = above.find_first(); m != GenSet::npos; m = above.find_next(m)) parts.push_back(substitute(H, j, m));
  }
  return d_join(H.lattice, parts);
}

Coalition star(const HeteroStructure& H, const Partition& e1, const Partition& e2) {
  H.lattice.require(e2);
  Coalition r;
  for (std::size_t j = 0; j < H.agent_count(); ++j)
    if (refines(subst_transform(H, Coalition::single(j), e1), e2)) r = r | Coalition::single(j);
  return r;
}

Partition residual_second(const HeteroStructure& H, Coalition c, const Partition& e) {
  H.lattice.require(e);
  Partition acc = H.lattice.top();
  for (const auto& x : H.lattice.elements())
    if (refines(subst_transform(H, c, x), e)) acc = meet(acc, x);
  return acc;
}

Partition br_transform(const HeteroStructure& H, Coalition c, const Partition& e) {
  H.lattice.require(e);
  auto above = H.lattice.above(e);
  Partition acc = H.lattice.top();
  for (std::size_t j = 0; j < H.agent_count(); ++j) {
    if (!c.has(j)) continue;
    for (auto m = above.find_first(); m != GenSet::npos; m = above.find_next(m)) acc = meet(acc, substitute(H, j, m));
  }
  return acc;
}

Coalition brB(const HeteroStructure& H, const Partition& e1, const Partition& e2) {
  H.lattice.require(e1);
  Coalition r;
  for (std::size_t j = 0; j < H.agent_count(); ++j)
    if (refines(e1, br_transform(H, Coalition::single(j), e2))) r = r | Coalition::single(j);
  return r;
}

Partition vartriangle(const HeteroStructure& H, Coalition c, const Partition& e) {
  H.lattice.require(e);
  Partition acc = H.lattice.top();
  for (const auto& x : H.lattice.elements())
    if (refines(e, br_transform(H, c, x))) acc = meet(acc, x);
  return acc;
}

bool generators_meet_prime(const AgendaLattice& lattice) {
  const auto& els = lattice.elements();
  for (std::size_t m = 0; m < lattice.generator_count(); ++m)
    for (std::size_t x = 0; x < els.size(); ++x)
      for (std::size_t y = x; y < els.size(); ++y) {
        if (lattice.above_of(x).test(m) || lattice.above_of(y).test(m)) continue;
        if (refines(meet(els[x], els[y]), lattice.generator(m))) return false;
      }
  return true;
}

}  // namespace agenda
