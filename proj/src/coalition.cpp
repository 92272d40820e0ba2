#include "agenda/coalition.hpp"

#include <set>

#include "agenda/error.hpp"

namespace agenda {

AgentSet::AgentSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::Validation, "agent set is empty");
  if (names_.size() > 64) throw Error(ErrorKind::CapExceeded, "at most 64 agents");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw Error(ErrorKind::Validation, "duplicate agent names");
}

std::optional<std::size_t> AgentSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t AgentSet::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorKind::UnknownAgent, name);
  return *i;
}

std::string format_coalition(const AgentSet& agents, Coalition c) {
  std::string s = "{";
  bool first = true;
  for (std::size_t j = 0; j < agents.size(); ++j)
    if (c.has(j)) {
      s += (first ? "" : ",") + agents.name(j);
      first = false;
    }
  return s + "}";
}

InfluenceRelation InfluenceRelation::from_names(const AgentSet& agents,
                                                const std::vector<std::pair<std::string, std::string>>& pairs) {
  InfluenceRelation I(agents.size());
  for (const auto& [a, b] : pairs) I.add(agents.index_of(a), agents.index_of(b));
  return I;
}

void InfluenceRelation::add(std::size_t i, std::size_t j) {
  if (i >= out_.size() || j >= out_.size()) throw Error(ErrorKind::UnknownAgent, "influence index");
  out_[i] |= std::uint64_t{1} << j;
  in_[j] |= std::uint64_t{1} << i;
}

std::vector<std::pair<std::size_t, std::size_t>> InfluenceRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> v;
  for (std::size_t i = 0; i < out_.size(); ++i)
    for (std::size_t j = 0; j < out_.size(); ++j)
      if (influences(i, j)) v.push_back({i, j});
  return v;
}

Coalition influencers(const InfluenceRelation& I, Coalition c) {
  Coalition r;
  for (std::size_t j = 0; j < I.in_.size(); ++j)
    if (c.has(j)) r.bits |= I.in_[j];
  return r;
}

Coalition audience(const InfluenceRelation& I, Coalition c) {
  Coalition r;
  for (std::size_t j = 0; j < I.out_.size(); ++j)
    if (c.has(j)) r.bits |= I.out_[j];
  return r;
}

Coalition influence_diamond(const InfluenceRelation& I, Coalition c, DiamondDirection dir) {
  if (!c.subset_of(Coalition::all(I.agents()))) throw Error(ErrorKind::UnknownAgent, "coalition outside agent set");
  return dir == DiamondDirection::Influencers ? influencers(I, c) : audience(I, c);
}

Coalition influence_box(const InfluenceRelation& I, Coalition c, BoxDirection dir) {
  const std::size_t n = I.agents();
  auto d = dir == BoxDirection::OnlyInto ? DiamondDirection::Influencers : DiamondDirection::Audience;
  return influence_diamond(I, c.complement(n), d).complement(n);
}

}  // namespace agenda
