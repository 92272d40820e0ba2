// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "agenda/error.hpp"
#include "agenda/frames.hpp"
#include "agenda/scenario.hpp"
#include "oracle.hpp"

using namespace agenda;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

const AgendaReport* named(const DeliberationReport& r, const std::string& name) {
  for (const auto& a : r.named)
    if (a.name == name) return &a;
  return nullptr;
}

Check criterion1() {
  Check c;
  auto s = load_scenario_file(fixture("hiring.json"));
  auto m = build_model(s);
  auto r = analyze(s, m);
  auto proj = [&](std::vector<std::string> Y) { return projection_agenda(m.space, Y).partition; };
  c.expect(r.agents.size() == 2 && r.agents[0].verdict == Verdict::PrefersFirst, "Alan -> John");
  c.expect(r.agents.size() == 2 && r.agents[1].verdict == Verdict::NoDecision, "Betty -> NoDecision");
  c.expect(meet(r.agents[0].partition, r.agents[1].partition) == proj({"r", "p", "l"}), "e_a meet e_b is e_{p,r,l}");
  c.expect(r.distributed.verdict == Verdict::NoDecision, "e_a meet e_b -> NoDecision");
  c.expect(r.common.partition == proj({"r"}) && r.common.verdict == Verdict::PrefersFirst, "e_a join e_b = e_r -> John");
  auto pl = named(r, "e_p&e_l");
  c.expect(pl && pl->partition == proj({"p", "l"}) && pl->verdict == Verdict::PrefersSecond, "e_p meet e_l -> Mary");
  c.expect(r.candidate_set && r.candidate_set->size() == 4, "candidate set has 4 agendas");
  if (r.candidate_set) {
    std::size_t undecided = 0;
    for (const auto& a : *r.candidate_set)
      if (!decides(a.verdict)) {
        ++undecided;
        c.expect(a.partition == proj({"r", "l"}), "only e_r meet e_l undecided");
      }
    c.expect(undecided == 1, "exactly one candidate agenda undecided");
  }
  c.expect(r.aggregate.partition == proj({"r"}) && r.aggregate.verdict == Verdict::PrefersFirst, "S1 aggregate = r -> John");

  auto s2 = load_scenario_file(fixture("hiring_s2.json"));
  auto m2 = build_model(s2);
  auto r2 = analyze(s2, m2);
  c.expect(r2.aggregate.partition == projection_agenda(m2.space, {"p", "l"}).partition &&
               r2.aggregate.verdict == Verdict::PrefersSecond,
           "S2 aggregate = p meet l -> Mary");
  return c;
}

Check criterion2() {
  Check c;
  auto s = load_scenario_file(fixture("car.json"));
  auto m = build_model(s);
  auto r = analyze(s, m);
  const auto& W = m.space;
  c.expect(r.agents.size() == 2 && r.agents[0].verdict == Verdict::PrefersFirst, "Alan -> C1");
  c.expect(r.agents.size() == 2 && r.agents[1].verdict == Verdict::PrefersSecond, "Betty -> C2");
  c.expect(decide(W, Rule::Sum, sum_agenda(W, {"f"}), m.first, m.second) == Verdict::PrefersSecond, "e_f -> C2");
  c.expect(decide(W, Rule::Sum, sum_agenda(W, {"s", "f", "p", "t", "m"}), m.first, m.second) == Verdict::PrefersFirst,
           "e_X -> C1");
  c.expect(r.common.partition.is_top() && r.common.verdict == Verdict::Tie, "common agenda = tau (Tie)");
  c.expect(!decides(r.distributed.verdict), "distributed agenda undecided");
  auto expected = meet(meet(threshold_issue(W, {"f", "t", "m"}, 0).partition, threshold_issue(W, {"s", "f", "p"}, 0).partition),
                       threshold_issue(W, {"s", "f", "p"}, 1).partition);
  c.expect(r.aggregate.partition == expected, "aggregate = e_{B,0} meet e_{A,0} meet e_{A,1}");
  c.expect(r.aggregate.verdict == Verdict::PrefersFirst, "aggregate -> C1");
  return c;
}

Check criterion3() {
  Check c;
  for (std::size_t n = 2; n <= 10; ++n) {
    auto r = enumerate_irreducibles(n);
    c.expect(r.coatoms.size() == (std::size_t{1} << (n - 1)) - 1, "coatoms n=" + std::to_string(n));
    c.expect(r.atoms.size() == n * (n - 1) / 2, "atoms n=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    auto cov = oracle::irreducibles_by_covers(n);
    auto r = enumerate_irreducibles(n);
    c.expect(cov.meet_irreducible == r.coatoms.size() && cov.join_irreducible == r.atoms.size(),
             "cover-based count n=" + std::to_string(n));
  }
  auto r8 = enumerate_irreducibles(8);
  c.expect(r8.coatoms.size() == 127 && r8.atoms.size() == 28, "n=8 gives 127/28");
  return c;
}

Subset unite(const Subset& a, const Subset& b) {
  Subset s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] || b[i];
  return s;
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] && b[i];
  return s;
}

Subset set_of(std::initializer_list<std::size_t> xs) {
  Subset s(9);
  for (auto x : xs) s[x] = true;
  return s;
}

Check criterion4() {
  Check c;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  bool laws = true, adj = true, res = true;
  for (int t = 0; t < 500; ++t) {
    std::size_t n = size(rng);
    auto p = oracle::random_partition(rng, n), q = oracle::random_partition(rng, n), r = oracle::random_partition(rng, n);
    laws = laws && meet(p, q) == oracle::meet(p, q) && join(p, q) == oracle::join(p, q) && meet(p, q) == meet(q, p) &&
           join(p, q) == join(q, p) && meet(meet(p, q), r) == meet(p, meet(q, r)) &&
           join(join(p, q), r) == join(p, join(q, r)) && meet(p, join(p, q)) == p && join(p, meet(p, q)) == p &&
           meet(p, p) == p && join(p, p) == p && refines(p, q) == (meet(p, q) == p) && refines(p, q) == (join(p, q) == q);
  }
  for (int t = 0; t < 500; ++t) {
    std::size_t n = size(rng);
    auto e = oracle::random_partition(rng, n);
    auto x = oracle::random_subset(rng, n), y = oracle::random_subset(rng, n);
    adj = adj && oracle::subset(diamond_set(e, x), y) == oracle::subset(x, box_set(e, y));
    auto f = join(e, oracle::random_partition(rng, n));
    res = res && diamond_set(e, x) == oracle::diamond(e, x) && box_set(e, x) == oracle::box(e, x) &&
          oracle::subset(diamond_set(e, x), diamond_set(f, x)) && oracle::subset(box_set(f, x), box_set(e, x));
  }
  c.expect(laws, "lattice laws on 500 random triples");
  c.expect(adj, "diamond/box adjunction on 500 random instances");
  c.expect(res, "diamond/box residuation and monotonicity on 500 random instances");

  auto e1 = make_partition(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  auto e2 = make_partition(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  Subset W(9, true), none(9, false);
  auto A = set_of({0, 1, 2}), B = set_of({3, 4, 5});
  auto D1 = set_of({0, 3, 6}), D2 = set_of({1, 4, 7}), D3 = set_of({2, 5, 8});
  auto X = set_of({1, 5});
  c.expect(join(e1, e2).is_top() && meet(e1, e2).is_bottom(), "e1 join e2 = tau, e1 meet e2 = epsilon");
  c.expect(diamond_set(join(e1, e2), X) == W && diamond_set(e1, X) == unite(A, B) && diamond_set(e2, X) == unite(D2, D3) &&
               unite(diamond_set(e1, X), diamond_set(e2, X)) != W,
           "<e1 join e2>X = W != <e1>X u <e2>X");
  c.expect(diamond_set(meet(e1, e2), X) == X && intersect(diamond_set(e1, X), diamond_set(e2, X)) != X,
           "<e1 meet e2>X = X != <e1>X n <e2>X");
  c.expect(box_set(meet(e1, e2), X) == X && box_set(e1, X) == none && box_set(e2, X) == none,
           "[e1 meet e2]X = X != [e1]X u [e2]X = empty");
  auto Y = unite(A, D1);
  c.expect(box_set(join(e1, e2), Y) == none && box_set(e1, Y) == A && box_set(e2, Y) == D1 &&
               intersect(box_set(e1, Y), box_set(e2, Y)) == set_of({0}),
           "[e1 join e2]X = empty != [e1]X n [e2]X = {a1}");
  return c;
}

bool round_trip(const Preorder& pre) {
  auto e = equiv_from_preorder(pre);
  auto back = preorder_from_equiv(e, pre);
  if (!(back.order == pre) || back.transitivity_warning) return false;
  // strongly compatible partitions come back from their quotient preorder
  for (const auto& f : oracle::all_partitions(pre.size() <= 4 ? pre.size() : 0))
    if (compatibility(f, pre) == Compatibility::StronglyCompatible &&
        !(equiv_from_preorder(preorder_from_equiv(f, pre).order) == f))
      return false;
  return true;
}

Check criterion5() {
  Check c;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t off = n * n - n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off); ++mask) {
      Preorder p(n);
      std::size_t bit = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (a == b)
            p.set(a, b, true);
          else
            p.set(a, b, (mask >> bit++) & 1u);
      if (!p.is_transitive()) continue;
      ++count;
      c.expect(round_trip(p), "exhaustive preorder on " + std::to_string(n) + " points");
    }
  }
  c.expect(count == 1 + 4 + 29 + 355, "preorder count on <= 4 points");
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> size(1, 16);
  std::uniform_real_distribution<double> dens(0.0, 0.3);
  for (int t = 0; t < 200; ++t) c.expect(round_trip(oracle::random_preorder(rng, size(rng), dens(rng))), "random preorder");
  return c;
}

Check criterion6() {
  Check c;
  std::vector<std::string> X = {"s", "f", "p", "t", "m"};
  auto car = binary_space(X);
  std::size_t subsets = 0;
  for (std::uint32_t m = 1; m < 32; ++m) {
    std::vector<std::string> Y;
    for (std::size_t i = 0; i < 5; ++i)
      if ((m >> i) & 1u) Y.push_back(X[i]);
    ++subsets;
    c.expect(sum_decomposition_check(car, Y), "car subset " + join_names(Y));
  }
  c.expect(subsets == 31, "31 subsets");
  auto chain = Scale::chain({"0", "1/2", "1"});
  auto halves = build_space({{"x", chain}, {"y", chain}, {"z", chain}});
  c.expect(sum_decomposition_check(halves, {"x", "y", "z"}), "three {0,1/2,1} chains");
  return c;
}

Check criterion7() {
  Check c;
  std::vector<std::string> names = {"a", "b", "c", "d"};
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::string> X(names.begin(), names.begin() + static_cast<long>(k));
    c.expect(is_distributive(build_lattice(projection_issues(binary_space(X)))).distributive,
             "projection lattice |X|=" + std::to_string(k));
  }
  auto s = binary_space({"x", "y"});
  auto L = build_lattice(all_threshold_issues(s));
  auto r = is_distributive(L);
  c.expect(!r.distributive && r.witness.has_value(), "sum lattice reported non-distributive");
  if (r.witness) {
    auto [x, y, z] = *r.witness;
    auto lhs = meet(x, d_join(L, {y, z}));
    auto rhs = d_join(L, {meet(x, y), meet(x, z)});
    c.expect(L.contains(x) && L.contains(y) && L.contains(z) && lhs != rhs, "witness verified");
  }
  return c;
}

Check criterion8() {
  Check c;
  auto ex = exhaustive_sweep(2, 2, false);
  auto rnd = random_sweep(3, 3, 200, 42, false);
  std::ostringstream summary;
  summary << ex.structures << " exhaustive structures, " << rnd.structures << " random 3x3;";
  for (std::size_t i = 0; i < ex.items.size(); ++i) {
    const auto& a = ex.items[i];
    const auto& b = rnd.items[i];
    if (a.disagreements || b.disagreements)
      summary << " item " << a.id << ": " << a.disagreements << "/" << b.disagreements << " disagreements";
  }
  c.expect(ex.all_agree() && rnd.all_agree(), summary.str());
  return c;
}

Check criterion9() {
  Check c;
  for (int k = 1; k <= 8; ++k) {
    auto fx = gt_fixture(k);
    auto rep = check_fixture(fx, 2, 1);
    std::string tag = "case " + std::to_string(k);
    c.expect(rep.verdicts_match, tag + ": condition verdicts");
    if (fx.partial) continue;
    if (rep.forth) c.expect(rep.forth->all(), tag + ": surjective forth map");
    if (rep.equivalence) {
      std::string detail = tag + ": bounded modal equivalence";
      if (rep.equivalence->first)
        detail += " fails on " + to_string(*rep.equivalence->first) + " (source " +
                  (rep.equivalence->lhs_valid ? "valid" : "invalid") + ", target " +
                  (rep.equivalence->rhs_valid ? "valid" : "invalid") + ")";
      c.expect(rep.equivalence->agree, detail);
    }
  }
  return c;
}

Check criterion10() {
  Check c;
  auto r = equivariance_witness_check(binary_space({"s", "f", "p", "t", "m"}));
  c.expect(r.sum_U_is_total && r.sum_U.size() == 4, "sum agenda on U is U x U");
  c.expect(r.sum_U2_is_identity && r.sum_U2.size() == 2, "sum agenda on U' is the identity");
  c.expect(r.g_preserves_e_s, "g(e_s(U)) = e_s(U')");
  c.expect(r.g_preserves_e_f, "g(e_f(U)) = e_f(U')");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check (*)()>> criteria = {
      {"hiring fixture", criterion1},
      {"car fixture", criterion2},
      {"irreducible counts", criterion3},
      {"lattice, adjunction and residuation properties", criterion4},
      {"preorder round trips", criterion5},
      {"sum decomposition", criterion6},
      {"distributivity", criterion7},
      {"correspondence oracle", criterion8},
      {"non-definability fixtures", criterion9},
      {"equivariance witness", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    std::cout.precision(2);
    std::cout << " (" << std::fixed << secs << " s)\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
