#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agenda/logic.hpp"

namespace agenda {

// F = (C, D, I, R, S) with I(i,j), R(m,j), S(n,j,m)
class RelationalStructure {
 public:
  RelationalStructure() = default;
  RelationalStructure(std::vector<std::string> C, std::vector<std::string> D);

  static RelationalStructure from_names(std::vector<std::string> C, std::vector<std::string> D,
                                        const std::vector<std::pair<std::string, std::string>>& I,
                                        const std::vector<std::pair<std::string, std::string>>& R,
                                        const std::vector<std::array<std::string, 3>>& S);
  static RelationalStructure from_json(const std::string& text);
  std::string to_json() const;

  std::size_t nc() const { return C_.size(); }
  std::size_t nd() const { return D_.size(); }
  const std::vector<std::string>& agents() const { return C_; }
  const std::vector<std::string>& issues() const { return D_; }

  void set_I(std::size_t i, std::size_t j, bool v = true) { I_[i * nc() + j] = v; }
  void set_R(std::size_t m, std::size_t j, bool v = true) { R_[m * nc() + j] = v; }
  void set_S(std::size_t n, std::size_t j, std::size_t m, bool v = true) { S_[(n * nc() + j) * nd() + m] = v; }
  bool I(std::size_t i, std::size_t j) const { return I_[i * nc() + j]; }
  bool R(std::size_t m, std::size_t j) const { return R_[m * nc() + j]; }
  bool S(std::size_t n, std::size_t j, std::size_t m) const { return S_[(n * nc() + j) * nd() + m]; }

  std::string to_string() const;

 private:
  std::vector<std::string> C_, D_;
  std::vector<std::uint8_t> I_, R_, S_;
};

// complex algebra F+: coalitions = P(C), elements = subsets of D as bitmasks, ordered by reverse inclusion
TwoSortedAlgebra complex_algebra(const RelationalStructure& F, std::size_t max_issues = 10);

enum class Condition {
  Symmetric, Antisymmetric, Unanimous, Reflexive, Transitive, GloballyIndifferent, Euclidean, SingleStepped,
  ReasonablyDuctile, PosCoherent, NegCoherent, NegPrefCoherent, PosPrefCoherent, Equanimous, Bicoherent,
  Intransigent, IPosCoherent, INegCoherent, IRSCoherent,
};

const std::vector<Condition>& all_conditions();
std::string condition_name(Condition c);
std::optional<Condition> condition_from_name(const std::string& name);
bool check_condition(const RelationalStructure& F, Condition c);

struct CorrespondenceItem {
  std::string id;
  Condition condition;
  Sequent axiom;
};

const std::vector<CorrespondenceItem>& correspondence_items();
// reformulations that are not part of the stated list; reported alongside
const std::vector<CorrespondenceItem>& alternate_items();

struct PairReport {
  bool fo = false, axiom = false;
  bool agree() const { return fo == axiom; }
  std::optional<Valuation> counterexample;
};

PairReport correspondence_pair(const RelationalStructure& F, const CorrespondenceItem& item);
PairReport correspondence_pair(const RelationalStructure& F, const TwoSortedAlgebra& A, const CorrespondenceItem& item);

struct SweepItem {
  std::string id;
  std::size_t disagreements = 0;
  std::optional<RelationalStructure> witness;
};

struct SweepReport {
  std::size_t structures = 0;
  std::vector<SweepItem> items;
  bool all_agree(bool include_alternates = false) const;
};

SweepReport exhaustive_sweep(std::size_t max_c, std::size_t max_d, bool with_alternates = true);
SweepReport random_sweep(std::size_t nc, std::size_t nd, std::size_t count, std::uint64_t seed,
                         bool with_alternates = true);

RelationalStructure disjoint_union(const RelationalStructure& F1, const RelationalStructure& F2);

struct ForthReport {
  bool surjective = false, forth_I = false, forth_R = false, forth_S = false;
  bool all() const { return surjective && forth_I && forth_R && forth_S; }
};

ForthReport check_forth_morphism(const std::vector<std::size_t>& fC, const std::vector<std::size_t>& fD,
                                 const RelationalStructure& F1, const RelationalStructure& F2);

struct EquivalenceReport {
  bool agree = true;
  std::size_t ia_terms = 0, c_terms = 0, sequents = 0, disagreements = 0;
  std::optional<Sequent> first;
  bool lhs_valid = false, rhs_valid = false;  // verdicts on the first disagreeing sequent
};

// validity in every algebra of lhs vs validity in every algebra of rhs, over a term family
// built from atoms and constants by `depth` rounds of every operator, deduplicated semantically
EquivalenceReport bounded_modal_equivalence(const std::vector<const TwoSortedAlgebra*>& lhs,
                                            const std::vector<const TwoSortedAlgebra*>& rhs, int depth = 2,
                                            int atom_cap = 1);
EquivalenceReport bounded_modal_equivalence(const RelationalStructure& F1, const RelationalStructure& F2,
                                            int depth = 2, int atom_cap = 1);

enum class FixtureKind { Morphism, Union };

struct GtFixture {
  int number = 0;
  FixtureKind kind = FixtureKind::Morphism;
  std::vector<RelationalStructure> sources;  // F1, or the union components
  RelationalStructure target;                // F2, or the disjoint union
  std::vector<std::size_t> map_C, map_D;     // morphism cases
  Condition condition = Condition::Symmetric;
  bool expected_source = true, expected_target = false;
  bool partial = false;
};

GtFixture gt_fixture(int number, bool require_full = false);

struct FixtureReport {
  bool verdicts_match = false;
  std::vector<bool> source_verdicts;
  bool target_verdict = false;
  std::optional<ForthReport> forth;
  std::optional<EquivalenceReport> equivalence;
  bool passed() const;
};

FixtureReport check_fixture(const GtFixture& fx, int depth = 2, int atom_cap = 1);

}  // namespace agenda
