#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "agenda/partition.hpp"

namespace agenda {

using Rational = boost::rational<long long>;

Rational parse_rational(const std::string& text);
std::optional<Rational> try_parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

enum class ScaleKind { Chain, Poset };

class Scale {
 public:
  // labels listed bottom to top; numeric defaults to the labels parsed as rationals when possible
  static Scale chain(std::vector<std::string> labels, std::optional<std::vector<Rational>> numeric = std::nullopt);
  static Scale poset(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers,
                     std::vector<std::optional<Rational>> numeric = {});
  static Scale binary() { return chain({"0", "1"}); }

  ScaleKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  bool le(std::size_t a, std::size_t b) const { return le_[a * size() + b] != 0; }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }
  const std::optional<Rational>& numeric(std::size_t i) const { return numeric_[i]; }
  bool fully_numeric() const;
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

 private:
  void finish();

  ScaleKind kind_ = ScaleKind::Chain;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> le_;
  std::vector<std::optional<Rational>> numeric_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::size_t top_ = 0, bottom_ = 0;
};

struct Parameter {
  std::string name;
  Scale scale;
};

using Profile = std::vector<std::size_t>;  // value index per parameter

class FeatureSpace {
 public:
  const std::vector<Parameter>& parameters() const { return params_; }
  std::size_t size() const { return profiles_.size(); }
  const Profile& profile(std::size_t id) const { return profiles_[id]; }
  std::size_t index_of(const Profile& p) const;
  std::size_t param_index(const std::string& name) const;
  std::vector<std::size_t> param_indices(const std::vector<std::string>& names) const;
  const Preorder& dominance() const { return dominance_; }
  std::string profile_label(std::size_t id) const;

  friend FeatureSpace build_space(std::vector<Parameter> params, std::size_t cap);

 private:
  std::vector<Parameter> params_;
  std::vector<Profile> profiles_;
  Preorder dominance_;
};

FeatureSpace build_space(std::vector<Parameter> params, std::size_t cap = 4096);
FeatureSpace binary_space(const std::vector<std::string>& names);

struct ProjectionDescriptor {
  std::vector<std::string> Y;
};
struct SumDescriptor {
  std::vector<std::string> Y;
};
struct ThresholdDescriptor {
  std::vector<std::string> Y;
  Rational k;
};
struct MeetOfIssues {
  std::vector<std::string> ids;
};
struct Opaque {};

using Descriptor = std::variant<ProjectionDescriptor, SumDescriptor, ThresholdDescriptor, MeetOfIssues, Opaque>;
std::string describe(const Descriptor& d);

struct Agenda {
  Partition partition;
  Descriptor descriptor;
};

std::vector<std::string> sorted_names(std::vector<std::string> names);
std::string join_names(const std::vector<std::string>& names);

Agenda projection_agenda(const FeatureSpace& space, const std::vector<std::string>& Y);
std::vector<Rational> sum_scores(const FeatureSpace& space, const std::vector<std::string>& Y);
Agenda sum_agenda(const FeatureSpace& space, const std::vector<std::string>& Y);
Agenda threshold_issue(const FeatureSpace& space, const std::vector<std::string>& Y, const Rational& k);
// one issue per achievable non-maximal sum value, ascending k
std::vector<Agenda> thresholds(const FeatureSpace& space, const std::vector<std::string>& Y);
std::string issue_id(const Descriptor& d);

enum class Rule { TotalDominance, Sum };
const char* to_string(Rule r);

Preorder rule_preorder(const FeatureSpace& space, Rule rule, const std::vector<std::string>& Y);

enum class Verdict { PrefersFirst, PrefersSecond, Tie, NoDecision };
const char* to_string(Verdict v);
inline bool decides(Verdict v) { return v == Verdict::PrefersFirst || v == Verdict::PrefersSecond; }

Verdict decide(const FeatureSpace& space, Rule rule, const Agenda& agenda, std::size_t first, std::size_t second);

bool sum_decomposition_check(const FeatureSpace& space, const std::vector<std::string>& Y);

using PairSet = std::vector<std::pair<std::size_t, std::size_t>>;

struct EquivarianceReport {
  std::size_t w = 0, u = 0, w2 = 0, u2 = 0;
  PairSet e_s_U, e_s_U2, e_f_U, e_f_U2, sum_U, sum_U2;
  bool g_preserves_e_s = false;
  bool g_preserves_e_f = false;
  bool sum_U_is_total = false;
  bool sum_U2_is_identity = false;
  bool all() const { return g_preserves_e_s && g_preserves_e_f && sum_U_is_total && sum_U2_is_identity; }
};

EquivarianceReport equivariance_witness_check(const FeatureSpace& space5);

}  // namespace agenda
