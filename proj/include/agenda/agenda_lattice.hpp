#pragma once

#include <array>
#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "agenda/feature_space.hpp"

namespace agenda {

using GenSet = boost::dynamic_bitset<>;

struct Issue {
  std::string id;
  Agenda agenda;
};

class IssueSet {
 public:
  IssueSet() = default;
  explicit IssueSet(std::vector<Issue> issues);

  std::size_t size() const { return issues_.size(); }
  const Issue& operator[](std::size_t i) const { return issues_[i]; }
  const std::vector<Issue>& issues() const { return issues_; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t ground_size() const { return ground_; }
  bool all_coatoms() const;

 private:
  std::vector<Issue> issues_;
  std::size_t ground_ = 0;
};

class AgendaLattice {
 public:
  const IssueSet& issues() const { return issues_; }
  std::size_t generator_count() const { return issues_.size(); }
  std::size_t ground_size() const { return issues_.ground_size(); }

  bool materialized() const { return materialized_; }
  const std::vector<Partition>& elements() const;
  std::optional<std::size_t> index_of(const Partition& p) const;
  const GenSet& above_of(std::size_t element) const { return above_[element]; }

  GenSet above(const Partition& p) const;
  Partition meet_of(const GenSet& gens) const;
  bool contains(const Partition& p) const;
  void require(const Partition& p) const;

  Partition top() const { return Partition::top(ground_size()); }
  Partition bottom() const;
  Partition generator(std::size_t m) const { return issues_[m].agenda.partition; }

  Agenda as_agenda(const Partition& p) const;

  friend AgendaLattice build_lattice(IssueSet issues, std::size_t cap, std::size_t element_cap);

 private:
  IssueSet issues_;
  bool materialized_ = false;
  std::vector<Partition> elements_;
  std::vector<GenSet> above_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

// materialized when |issues| <= cap and |D| <= element_cap, lazy otherwise
AgendaLattice build_lattice(IssueSet issues, std::size_t cap = 20, std::size_t element_cap = 4096);

Partition d_join(const AgendaLattice& lattice, const std::vector<Partition>& elems);

struct DistributivityReport {
  bool distributive = true;
  std::optional<std::array<Partition, 3>> witness;  // x, y, z with x&(y|z) != (x&y)|(x&z)
  std::optional<std::array<Partition, 2>> sides;
};

DistributivityReport is_distributive(const AgendaLattice& lattice, std::size_t element_cap = 512);

std::vector<Agenda> coarsenings_crs(const FeatureSpace& space, const std::vector<std::string>& Y, std::size_t removed);
std::vector<Agenda> coarsenings_crs1(const FeatureSpace& space, const std::vector<std::string>& Y);
std::vector<Agenda> candidate_set_C(const FeatureSpace& space, const std::vector<std::vector<std::string>>& agent_params,
                                    std::size_t removed = 1);

IssueSet projection_issues(const FeatureSpace& space);
IssueSet threshold_issues(const FeatureSpace& space, const std::vector<std::vector<std::string>>& sets);
IssueSet all_threshold_issues(const FeatureSpace& space);

std::string lattice_dot(const AgendaLattice& lattice);
std::string profile_poset_dot(const FeatureSpace& space, std::size_t cap = 512);
std::string partition_lattice_dot(std::size_t n);

}  // namespace agenda
