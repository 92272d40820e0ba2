#include "agenda/agenda_lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "agenda/error.hpp"

namespace agenda {

IssueSet::IssueSet(std::vector<Issue> issues) : issues_(std::move(issues)) {
  std::set<std::string> ids;
  for (const auto& is : issues_) {
    if (!ids.insert(is.id).second) throw Error(ErrorKind::Validation, "duplicate issue id " + is.id);
    if (is.agenda.partition.is_top()) throw Error(ErrorKind::Validation, "issue " + is.id + " is tau");
    if (ground_ == 0) ground_ = is.agenda.partition.size();
    if (is.agenda.partition.size() != ground_) throw Error(ErrorKind::GroundMismatch, "issue " + is.id);
  }
}

std::optional<std::size_t> IssueSet::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < issues_.size(); ++i)
    if (issues_[i].id == id) return i;
  return std::nullopt;
}

bool IssueSet::all_coatoms() const {
  return std::all_of(issues_.begin(), issues_.end(), [](const Issue& i) { return i.agenda.partition.block_count() == 2; });
}

const std::vector<Partition>& AgendaLattice::elements() const {
  if (!materialized_) throw Error(ErrorKind::NotMaterialized, "agenda lattice is lazy");
  return elements_;
}

std::optional<std::size_t> AgendaLattice::index_of(const Partition& p) const {
  if (!materialized_) throw Error(ErrorKind::NotMaterialized, "agenda lattice is lazy");
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GenSet AgendaLattice::above(const Partition& p) const {
  GenSet s(issues_.size());
  for (std::size_t m = 0; m < issues_.size(); ++m)
    if (refines(p, issues_[m].agenda.partition)) s.set(m);
  return s;
}

Partition AgendaLattice::meet_of(const GenSet& gens) const {
  Partition acc = top();
  for (auto m = gens.find_first(); m != GenSet::npos; m = gens.find_next(m))
    acc = meet(acc, issues_[m].agenda.partition);
  return acc;
}

bool AgendaLattice::contains(const Partition& p) const {
  if (p.size() != ground_size()) return false;
  if (materialized_) return index_.count(p) > 0;
  return meet_of(above(p)) == p;
}

void AgendaLattice::require(const Partition& p) const {
  if (!contains(p)) throw Error(ErrorKind::NotInLattice, p.to_string());
}

Partition AgendaLattice::bottom() const {
  GenSet all(issues_.size());
  all.set();
  return meet_of(all);
}

Agenda AgendaLattice::as_agenda(const Partition& p) const {
  MeetOfIssues d;
  auto gens = above(p);
  for (auto m = gens.find_first(); m != GenSet::npos; m = gens.find_next(m)) d.ids.push_back(issues_[m].id);
  return {p, d};
}

AgendaLattice build_lattice(IssueSet issues, std::size_t cap, std::size_t element_cap) {
  AgendaLattice L;
  L.issues_ = std::move(issues);
  if (L.issues_.size() == 0) throw Error(ErrorKind::Validation, "empty issue set");
  if (L.issues_.size() > cap) return L;
  std::deque<std::size_t> queue;
  auto add = [&](const Partition& p) {
    auto [it, fresh] = L.index_.emplace(p, L.elements_.size());
    if (fresh) {
      L.elements_.push_back(p);
      queue.push_back(it->second);
    }
    return fresh;
  };
  add(L.top());
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t m = 0; m < L.issues_.size(); ++m) {
      add(meet(L.elements_[i], L.issues_[m].agenda.partition));
      if (L.elements_.size() > element_cap) {
        L.elements_.clear();
        L.index_.clear();
        return L;
      }
    }
  }
  for (const auto& e : L.elements_) L.above_.push_back(L.above(e));
  L.materialized_ = true;
  return L;
}

Partition d_join(const AgendaLattice& lattice, const std::vector<Partition>& elems) {
  GenSet common(lattice.generator_count());
  common.set();
  for (const auto& e : elems) {
    lattice.require(e);
    common &= lattice.above(e);
  }
  return lattice.meet_of(common);
}

DistributivityReport is_distributive(const AgendaLattice& lattice, std::size_t element_cap) {
  const auto& els = lattice.elements();
  const std::size_t n = els.size();
  if (n > element_cap) throw Error(ErrorKind::CapExceeded, "distributivity scan over " + std::to_string(n) + " elements");
  std::map<GenSet, std::size_t> by_gens;
  for (std::size_t i = 0; i < n; ++i) by_gens.emplace(lattice.above_of(i), i);
  std::vector<std::size_t> mt(n * n), jn(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      mt[a * n + b] = *lattice.index_of(meet(els[a], els[b]));
      jn[a * n + b] = by_gens.at(lattice.above_of(a) & lattice.above_of(b));
    }
  DistributivityReport r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto lhs = mt[x * n + jn[y * n + z]];
        auto rhs = jn[mt[x * n + y] * n + mt[x * n + z]];
        if (lhs != rhs) {
          r.distributive = false;
          r.witness = std::array<Partition, 3>{els[x], els[y], els[z]};
          r.sides = std::array<Partition, 2>{els[lhs], els[rhs]};
          return r;
        }
      }
  return r;
}

std::vector<Agenda> coarsenings_crs(const FeatureSpace& space, const std::vector<std::string>& Y, std::size_t removed) {
  auto names = sorted_names(Y);
  if (names.empty()) throw Error(ErrorKind::EmptyAgendaSet, "coarsening of the empty parameter set");
  std::vector<Agenda> out;
  if (removed >= names.size()) {
    out.push_back(projection_agenda(space, {}));
    return out;
  }
  const std::size_t keep = names.size() - removed;
  std::vector<bool> pick(names.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(keep), true);
  do {
    std::vector<std::string> Z;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (pick[i]) Z.push_back(names[i]);
    out.push_back(projection_agenda(space, Z));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Agenda> coarsenings_crs1(const FeatureSpace& space, const std::vector<std::string>& Y) {
  return coarsenings_crs(space, Y, 1);
}

std::vector<Agenda> candidate_set_C(const FeatureSpace& space, const std::vector<std::vector<std::string>>& agent_params,
                                    std::size_t removed) {
  if (agent_params.size() < 2) throw Error(ErrorKind::Validation, "candidate set needs at least two agents");
  std::vector<std::vector<Agenda>> options;
  for (const auto& Y : agent_params) options.push_back(coarsenings_crs(space, Y, removed));
  std::vector<Agenda> out;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    std::vector<std::string> U;
    for (std::size_t a = 0; a < options.size(); ++a) {
      const auto& d = std::get<ProjectionDescriptor>(options[a][choice[a]].descriptor);
      U.insert(U.end(), d.Y.begin(), d.Y.end());
    }
    auto ag = projection_agenda(space, U);
    bool dup = std::any_of(out.begin(), out.end(), [&](const Agenda& x) { return x.partition == ag.partition; });
    if (!dup) out.push_back(ag);
    std::size_t a = 0;
    for (; a < options.size(); ++a) {
      if (++choice[a] < options[a].size()) break;
      choice[a] = 0;
    }
    if (a == options.size()) break;
  }
  return out;
}

IssueSet projection_issues(const FeatureSpace& space) {
  std::vector<Issue> v;
  for (const auto& p : space.parameters()) {
    v.push_back({"param:" + p.name, projection_agenda(space, {p.name})});
  }
  return IssueSet(std::move(v));
}

IssueSet threshold_issues(const FeatureSpace& space, const std::vector<std::vector<std::string>>& sets) {
  std::vector<Issue> v;
  std::set<std::string> seen;
  for (const auto& Y : sets)
    for (auto& t : thresholds(space, Y)) {
      auto id = issue_id(t.descriptor);
      if (seen.insert(id).second) v.push_back({id, t});
    }
  return IssueSet(std::move(v));
}

IssueSet all_threshold_issues(const FeatureSpace& space) {
  std::vector<std::vector<std::string>> sets;
  const std::size_t n = space.parameters().size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::string> Y;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) Y.push_back(space.parameters()[i].name);
    sets.push_back(Y);
  }
  return threshold_issues(space, sets);
}

namespace {

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

// covering pairs of a finite order given as a le-predicate
template <class Le>
std::vector<std::pair<std::size_t, std::size_t>> covers(std::size_t n, Le le) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !le(a, b) || le(b, a)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && le(a, c) && le(c, b) && !le(c, a) && !le(b, c)) cover = false;
      if (cover) out.push_back({a, b});
    }
  return out;
}

std::string render(const std::string& name, const std::vector<std::string>& labels,
                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) os << "  n" << i << " [label=\"" << escape(labels[i]) << "\"];\n";
  for (const auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string lattice_dot(const AgendaLattice& lattice) {
  const auto& els = lattice.elements();
  std::vector<std::string> labels;
  for (const auto& e : els) labels.push_back(describe(lattice.as_agenda(e).descriptor));
  auto edges = covers(els.size(), [&](std::size_t a, std::size_t b) { return refines(els[a], els[b]); });
  return render("agendas", labels, edges);
}

std::string profile_poset_dot(const FeatureSpace& space, std::size_t cap) {
  if (space.size() > cap) throw Error(ErrorKind::CapExceeded, "profile poset too large for DOT export");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < space.size(); ++i) labels.push_back(space.profile_label(i));
  auto edges = covers(space.size(), [&](std::size_t a, std::size_t b) { return space.dominance().le(a, b); });
  return render("profiles", labels, edges);
}

std::string partition_lattice_dot(std::size_t n) {
  if (n == 0 || n > 6) throw Error(ErrorKind::CapExceeded, "E(W) export limited to 1..6 points");
  // restricted growth strings enumerate every partition once
  std::vector<Partition> all;
  std::vector<std::uint32_t> rgs(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t mx) {
    if (i == n) {
      all.push_back(Partition::from_labels(rgs));
      return;
    }
    for (std::uint32_t v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  rec(1, 0);
  std::vector<std::string> labels;
  for (const auto& p : all) labels.push_back(p.to_string());
  auto edges = covers(all.size(), [&](std::size_t a, std::size_t b) { return refines(all[a], all[b]); });
  return render("partitions", labels, edges);
}

}  // namespace agenda
