#include "agenda/feature_space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "agenda/error.hpp"

namespace agenda {

std::optional<Rational> try_parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') return false;
    try {
      out = std::stoll(s);
    } catch (...) {
      return false;
    }
    return true;
  };
  long long num = 0, den = 1;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den) || den == 0)
      return std::nullopt;
  }
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  auto r = try_parse_rational(text);
  if (!r) throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
  return *r;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Scale Scale::chain(std::vector<std::string> labels, std::optional<std::vector<Rational>> numeric) {
  Scale s;
  s.kind_ = ScaleKind::Chain;
  s.labels_ = std::move(labels);
  const std::size_t n = s.labels_.size();
  if (n == 0) throw Error(ErrorKind::MalformedScale, "empty scale");
  s.numeric_.resize(n);
  if (numeric) {
    if (numeric->size() != n) throw Error(ErrorKind::MalformedScale, "numeric values do not match labels");
    for (std::size_t i = 0; i < n; ++i) s.numeric_[i] = (*numeric)[i];
  } else {
    std::vector<std::optional<Rational>> parsed(n);
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      parsed[i] = try_parse_rational(s.labels_[i]);
      all = all && parsed[i].has_value();
    }
    if (all) s.numeric_ = parsed;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) s.covers_.push_back({i, i + 1});
  s.le_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) s.le_[a * n + b] = 1;
  s.finish();
  if (s.fully_numeric())
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(*s.numeric_[i] < *s.numeric_[i + 1]))
        throw Error(ErrorKind::MalformedScale, "numeric values must increase along the chain");
  return s;
}

Scale Scale::poset(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers,
                   std::vector<std::optional<Rational>> numeric) {
  Scale s;
  s.kind_ = ScaleKind::Poset;
  s.labels_ = std::move(labels);
  const std::size_t n = s.labels_.size();
  if (n == 0) throw Error(ErrorKind::MalformedScale, "empty scale");
  if (numeric.empty()) numeric.resize(n);
  if (numeric.size() != n) throw Error(ErrorKind::MalformedScale, "numeric values do not match labels");
  s.numeric_ = std::move(numeric);
  s.le_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) s.le_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = s.index_of(lo), b = s.index_of(hi);
    if (!a || !b) throw Error(ErrorKind::MalformedScale, "cover mentions unknown value " + lo + "/" + hi);
    s.covers_.push_back({*a, *b});
    s.le_[*a * n + *b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (s.le_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (s.le_[k * n + j]) s.le_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.le_[i * n + j] && s.le_[j * n + i]) throw Error(ErrorKind::MalformedScale, "cycle in covers");
  s.finish();
  return s;
}

void Scale::finish() {
  const std::size_t n = size();
  std::optional<std::size_t> top, bottom;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_top = true, is_bottom = true;
    for (std::size_t j = 0; j < n; ++j) {
      is_top = is_top && le(j, i);
      is_bottom = is_bottom && le(i, j);
    }
    if (is_top) top = i;
    if (is_bottom) bottom = i;
  }
  if (!top || !bottom) throw Error(ErrorKind::MalformedScale, "scale needs a unique top and bottom");
  top_ = *top;
  bottom_ = *bottom;
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw Error(ErrorKind::MalformedScale, "duplicate value labels");
}

std::optional<std::size_t> Scale::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool Scale::fully_numeric() const {
  return std::all_of(numeric_.begin(), numeric_.end(), [](const auto& v) { return v.has_value(); });
}

std::size_t FeatureSpace::index_of(const Profile& p) const {
  if (p.size() != params_.size()) throw Error(ErrorKind::Validation, "profile arity");
  std::size_t id = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= params_[i].scale.size()) throw Error(ErrorKind::IndexOutOfRange, "value index");
    id = id * params_[i].scale.size() + p[i];
  }
  return id;
}

std::size_t FeatureSpace::param_index(const std::string& name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i].name == name) return i;
  throw Error(ErrorKind::UnknownParameter, name);
}

std::vector<std::size_t> FeatureSpace::param_indices(const std::vector<std::string>& names) const {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(param_index(n));
  return out;
}

std::string FeatureSpace::profile_label(std::size_t id) const {
  std::string s = "(";
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) s += ",";
    s += params_[i].scale.label(profiles_[id][i]);
  }
  return s + ")";
}

FeatureSpace build_space(std::vector<Parameter> params, std::size_t cap) {
  if (params.empty()) throw Error(ErrorKind::Validation, "at least one parameter required");
  std::set<std::string> names;
  std::size_t total = 1;
  for (const auto& p : params) {
    if (!names.insert(p.name).second) throw Error(ErrorKind::Validation, "duplicate parameter " + p.name);
    total *= p.scale.size();
    if (total > cap) throw Error(ErrorKind::CapExceeded, "profile space exceeds cap " + std::to_string(cap));
  }
  FeatureSpace s;
  s.params_ = std::move(params);
  s.profiles_.reserve(total);
  Profile cur(s.params_.size(), 0);
  for (std::size_t id = 0; id < total; ++id) {
    s.profiles_.push_back(cur);
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (++cur[i] < s.params_[i].scale.size()) break;
      cur[i] = 0;
    }
  }
  s.dominance_ = Preorder::from_predicate(total, [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < s.params_.size(); ++i)
      if (!s.params_[i].scale.le(s.profiles_[a][i], s.profiles_[b][i])) return false;
    return true;
  });
  return s;
}

FeatureSpace binary_space(const std::vector<std::string>& names) {
  std::vector<Parameter> ps;
  for (const auto& n : names) ps.push_back({n, Scale::binary()});
  return build_space(std::move(ps));
}

std::vector<std::string> sorted_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s;
}

std::string describe(const Descriptor& d) {
  struct V {
    std::string operator()(const ProjectionDescriptor& p) const { return "e_{" + join_names(p.Y) + "}"; }
    std::string operator()(const SumDescriptor& p) const { return "sum_{" + join_names(p.Y) + "}"; }
    std::string operator()(const ThresholdDescriptor& p) const {
      return "sum_{" + join_names(p.Y) + "}<=" + format_rational(p.k);
    }
    std::string operator()(const MeetOfIssues& m) const {
      if (m.ids.empty()) return "tau";
      std::string s;
      for (std::size_t i = 0; i < m.ids.size(); ++i) s += (i ? " & " : "") + m.ids[i];
      return s;
    }
    std::string operator()(const Opaque&) const { return "opaque"; }
  };
  return std::visit(V{}, d);
}

std::string issue_id(const Descriptor& d) {
  if (auto p = std::get_if<ProjectionDescriptor>(&d); p && p->Y.size() == 1) return "param:" + p->Y[0];
  if (auto t = std::get_if<ThresholdDescriptor>(&d)) return "sum:" + join_names(t->Y) + "<=" + format_rational(t->k);
  return describe(d);
}

Agenda projection_agenda(const FeatureSpace& space, const std::vector<std::string>& Y) {
  auto names = sorted_names(Y);
  auto idx = space.param_indices(names);
  std::vector<std::uint32_t> labels(space.size());
  std::map<std::vector<std::size_t>, std::uint32_t> key;
  for (std::size_t w = 0; w < space.size(); ++w) {
    std::vector<std::size_t> k;
    for (auto i : idx) k.push_back(space.profile(w)[i]);
    auto it = key.emplace(k, static_cast<std::uint32_t>(key.size())).first;
    labels[w] = it->second;
  }
  return {Partition::from_labels(labels), ProjectionDescriptor{names}};
}

std::vector<Rational> sum_scores(const FeatureSpace& space, const std::vector<std::string>& Y) {
  auto idx = space.param_indices(Y);
  for (auto i : idx) {
    const auto& sc = space.parameters()[i].scale;
    if (sc.kind() != ScaleKind::Chain || !sc.fully_numeric())
      throw Error(ErrorKind::NonLinearScale, "parameter " + space.parameters()[i].name + " has no numeric chain scale");
  }
  std::vector<Rational> out(space.size());
  for (std::size_t w = 0; w < space.size(); ++w) {
    Rational s(0);
    for (auto i : idx) s += *space.parameters()[i].scale.numeric(space.profile(w)[i]);
    out[w] = s;
  }
  return out;
}

Agenda sum_agenda(const FeatureSpace& space, const std::vector<std::string>& Y) {
  auto names = sorted_names(Y);
  auto sums = sum_scores(space, names);
  std::map<Rational, std::uint32_t> key;
  std::vector<std::uint32_t> labels(space.size());
  for (std::size_t w = 0; w < space.size(); ++w)
    labels[w] = key.emplace(sums[w], static_cast<std::uint32_t>(key.size())).first->second;
  return {Partition::from_labels(labels), SumDescriptor{names}};
}

Agenda threshold_issue(const FeatureSpace& space, const std::vector<std::string>& Y, const Rational& k) {
  auto names = sorted_names(Y);
  auto sums = sum_scores(space, names);
  std::vector<std::uint32_t> labels(space.size());
  bool low = false, high = false;
  for (std::size_t w = 0; w < space.size(); ++w) {
    labels[w] = sums[w] <= k ? 0u : 1u;
    (labels[w] ? high : low) = true;
  }
  if (!low || !high)
    throw Error(ErrorKind::DegenerateThreshold, "sum:" + join_names(names) + "<=" + format_rational(k));
  return {Partition::from_labels(labels), ThresholdDescriptor{names, k}};
}

std::vector<Agenda> thresholds(const FeatureSpace& space, const std::vector<std::string>& Y) {
  auto names = sorted_names(Y);
  auto sums = sum_scores(space, names);
  std::set<Rational> values(sums.begin(), sums.end());
  std::vector<Agenda> out;
  if (values.size() < 2) return out;
  values.erase(std::prev(values.end()));
  for (const auto& k : values) out.push_back(threshold_issue(space, names, k));
  return out;
}

const char* to_string(Rule r) { return r == Rule::Sum ? "sum" : "total_dominance"; }

Preorder rule_preorder(const FeatureSpace& space, Rule rule, const std::vector<std::string>& Y) {
  if (rule == Rule::Sum) {
    auto sums = sum_scores(space, Y);
    return Preorder::from_predicate(space.size(), [&](std::size_t a, std::size_t b) { return sums[a] <= sums[b]; });
  }
  auto idx = space.param_indices(Y);
  return Preorder::from_predicate(space.size(), [&](std::size_t a, std::size_t b) {
    for (auto i : idx)
      if (!space.parameters()[i].scale.le(space.profile(a)[i], space.profile(b)[i])) return false;
    return true;
  });
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PrefersFirst: return "PrefersFirst";
    case Verdict::PrefersSecond: return "PrefersSecond";
    case Verdict::Tie: return "Tie";
    case Verdict::NoDecision: return "NoDecision";
  }
  return "?";
}

namespace {

Verdict from_order(bool first_le_second, bool second_le_first) {
  if (first_le_second && second_le_first) return Verdict::Tie;
  if (second_le_first) return Verdict::PrefersFirst;
  if (first_le_second) return Verdict::PrefersSecond;
  return Verdict::NoDecision;
}

}  // namespace

Verdict decide(const FeatureSpace& space, Rule rule, const Agenda& agenda, std::size_t first, std::size_t second) {
  if (first >= space.size() || second >= space.size()) throw Error(ErrorKind::IndexOutOfRange, "profile id");
  if (auto p = std::get_if<ProjectionDescriptor>(&agenda.descriptor)) {
    if (rule != Rule::TotalDominance) throw Error(ErrorKind::IncompatibleRule, "projection agenda under sum rule");
    auto pre = rule_preorder(space, rule, p->Y);
    return from_order(pre.le(first, second), pre.le(second, first));
  }
  if (auto s = std::get_if<SumDescriptor>(&agenda.descriptor)) {
    if (rule != Rule::Sum) throw Error(ErrorKind::IncompatibleRule, "sum agenda under total dominance");
    auto sums = sum_scores(space, s->Y);
    return from_order(sums[first] <= sums[second], sums[second] <= sums[first]);
  }
  if (auto t = std::get_if<ThresholdDescriptor>(&agenda.descriptor)) {
    if (rule != Rule::Sum) throw Error(ErrorKind::IncompatibleRule, "threshold issue under total dominance");
    auto sums = sum_scores(space, t->Y);
    int a = sums[first] > t->k, b = sums[second] > t->k;
    return from_order(a <= b, b <= a);
  }
  switch (prefers(agenda.partition, space.dominance(), first, second)) {
    case Preference::PrefersU: return Verdict::PrefersFirst;
    case Preference::PrefersW: return Verdict::PrefersSecond;
    case Preference::Tie: return Verdict::Tie;
    case Preference::Incomparable: return Verdict::NoDecision;
  }
  return Verdict::NoDecision;
}

bool sum_decomposition_check(const FeatureSpace& space, const std::vector<std::string>& Y) {
  Partition acc = Partition::top(space.size());
  for (const auto& t : thresholds(space, Y)) acc = meet(acc, t.partition);
  return acc == sum_agenda(space, Y).partition;
}

EquivarianceReport equivariance_witness_check(const FeatureSpace& space) {
  const std::vector<std::string> expected = {"s", "f", "p", "t", "m"};
  if (space.parameters().size() != 5) throw Error(ErrorKind::WrongSpace, "need 5 binary parameters");
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& sc = space.parameters()[i].scale;
    if (space.parameters()[i].name != expected[i] || sc.size() != 2 || sc.kind() != ScaleKind::Chain)
      throw Error(ErrorKind::WrongSpace, "need binary parameters s,f,p,t,m");
  }
  EquivarianceReport r;
  r.w = space.index_of({1, 0, 0, 0, 0});
  r.u = space.index_of({0, 1, 0, 0, 0});
  r.w2 = space.index_of({0, 0, 0, 0, 0});
  r.u2 = space.index_of({1, 1, 0, 0, 0});
  auto restrict = [](const Partition& e, std::vector<std::size_t> U) {
    PairSet out;
    std::sort(U.begin(), U.end());
    for (auto a : U)
      for (auto b : U)
        if (e.related(a, b)) out.push_back({a, b});
    return out;
  };
  auto g = [&](std::size_t x) { return x == r.w ? r.w2 : x == r.u ? r.u2 : x; };
  auto image = [&](PairSet ps) {
    for (auto& [a, b] : ps) a = g(a), b = g(b);
    std::sort(ps.begin(), ps.end());
    return ps;
  };
  const std::vector<std::size_t> U = {r.w, r.u}, U2 = {r.w2, r.u2};
  auto e_s = projection_agenda(space, {"s"}).partition;
  auto e_f = projection_agenda(space, {"f"}).partition;
  auto sigma = sum_agenda(space, {"s", "f"}).partition;
  r.e_s_U = restrict(e_s, U);
  r.e_s_U2 = restrict(e_s, U2);
  r.e_f_U = restrict(e_f, U);
  r.e_f_U2 = restrict(e_f, U2);
  r.sum_U = restrict(sigma, U);
  r.sum_U2 = restrict(sigma, U2);
  r.g_preserves_e_s = image(r.e_s_U) == r.e_s_U2;
  r.g_preserves_e_f = image(r.e_f_U) == r.e_f_U2;
  PairSet total;
  for (auto a : std::vector<std::size_t>{std::min(r.w, r.u), std::max(r.w, r.u)})
    for (auto b : std::vector<std::size_t>{std::min(r.w, r.u), std::max(r.w, r.u)}) total.push_back({a, b});
  r.sum_U_is_total = r.sum_U == total;
  PairSet ident = {{std::min(r.w2, r.u2), std::min(r.w2, r.u2)}, {std::max(r.w2, r.u2), std::max(r.w2, r.u2)}};
  r.sum_U2_is_identity = r.sum_U2 == ident;
  return r;
}

}  // namespace agenda
