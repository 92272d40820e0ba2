#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agenda {

class AgentSet {
 public:
  AgentSet() = default;
  explicit AgentSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

// subset of an ordered agent list, at most 64 agents
struct Coalition {
  std::uint64_t bits = 0;

  static Coalition none() { return {}; }
  static Coalition all(std::size_t n) { return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}; }
  static Coalition single(std::size_t j) { return {std::uint64_t{1} << j}; }

  bool has(std::size_t j) const { return (bits >> j) & 1u; }
  bool subset_of(Coalition o) const { return (bits & ~o.bits) == 0; }
  bool empty() const { return bits == 0; }
  Coalition operator|(Coalition o) const { return {bits | o.bits}; }
  Coalition operator&(Coalition o) const { return {bits & o.bits}; }
  Coalition complement(std::size_t n) const { return {~bits & all(n).bits}; }
  friend bool operator==(Coalition a, Coalition b) { return a.bits == b.bits; }
};

std::string format_coalition(const AgentSet& agents, Coalition c);

class InfluenceRelation {
 public:
  InfluenceRelation() = default;
  explicit InfluenceRelation(std::size_t n) : out_(n, 0), in_(n, 0) {}
  static InfluenceRelation from_names(const AgentSet& agents, const std::vector<std::pair<std::string, std::string>>& pairs);

  void add(std::size_t i, std::size_t j);
  bool influences(std::size_t i, std::size_t j) const { return (out_[i] >> j) & 1u; }
  std::size_t agents() const { return out_.size(); }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

 private:
  std::vector<std::uint64_t> out_;  // out_[i]: agents influenced by i
  std::vector<std::uint64_t> in_;   // in_[j]: agents influencing j
  friend Coalition influencers(const InfluenceRelation&, Coalition);
  friend Coalition audience(const InfluenceRelation&, Coalition);
};

enum class DiamondDirection { Influencers, Audience };
enum class BoxDirection { OnlyInto, OnlyFrom };

Coalition influencers(const InfluenceRelation& I, Coalition c);
Coalition audience(const InfluenceRelation& I, Coalition c);
Coalition influence_diamond(const InfluenceRelation& I, Coalition c, DiamondDirection dir);
// OnlyInto: boxdot c = not influencers(not c); OnlyFrom: blacksquaredot c = not audience(not c)
Coalition influence_box(const InfluenceRelation& I, Coalition c, BoxDirection dir);

}  // namespace agenda
