#include "doctest.h"

#include <map>

#include "agenda/error.hpp"
#include "agenda/feature_space.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace agenda;
using support::kind_of;

namespace {

FeatureSpace hiring() { return binary_space({"r", "p", "l"}); }
FeatureSpace car() { return binary_space({"s", "f", "p", "t", "m"}); }

FeatureSpace halves(std::size_t k) {
  std::vector<Parameter> ps;
  for (std::size_t i = 0; i < k; ++i) ps.push_back({std::string(1, char('x' + i)), Scale::chain({"0", "1/2", "1"})});
  return build_space(ps);
}

// exact sum oracle: group profiles by the rational sum of their numeric values on Y
Partition sum_oracle(const FeatureSpace& s, const std::vector<std::string>& Y) {
  std::vector<Rational> score(s.size());
  for (std::size_t w = 0; w < s.size(); ++w)
    for (const auto& y : Y) {
      auto i = s.param_index(y);
      score[w] += *s.parameters()[i].scale.numeric(s.profile(w)[i]);
    }
  oracle::Rel r(s.size(), std::vector<bool>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) r[a][b] = score[a] == score[b];
  return oracle::partition_of(r);
}

std::vector<std::vector<std::string>> nonempty_subsets(const std::vector<std::string>& xs) {
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t m = 1; m < (1u << xs.size()); ++m) {
    std::vector<std::string> y;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if ((m >> i) & 1u) y.push_back(xs[i]);
    out.push_back(y);
  }
  return out;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(format_rational(Rational(2, 3)) == "2/3");
  CHECK(format_rational(Rational(3)) == "3");
  CHECK_FALSE(try_parse_rational("u"));
}

TEST_CASE("space construction") {
  auto h = hiring();
  CHECK(h.size() == 8);
  std::size_t covers = 0;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      bool le = true;
      std::size_t diff = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        le = le && h.profile(a)[i] <= h.profile(b)[i];
        diff += h.profile(a)[i] != h.profile(b)[i];
      }
      CHECK(h.dominance().le(a, b) == le);
      if (le && diff == 1) ++covers;
    }
  CHECK(covers == 12);
  CHECK(h.dominance().is_antisymmetric());
  CHECK(car().size() == 32);

  auto n5 = Scale::poset({"0", "1/3", "2/3", "1", "u"}, {{"0", "1/3"}, {"1/3", "2/3"}, {"2/3", "1"}, {"0", "u"}, {"u", "1"}});
  CHECK(n5.kind() == ScaleKind::Poset);
  CHECK_FALSE(n5.le(*n5.index_of("u"), *n5.index_of("2/3")));
  CHECK(n5.le(*n5.index_of("0"), *n5.index_of("1")));
  auto space = build_space({{"r", n5}, {"p", Scale::chain({"0", "1/2", "1"})}, {"l", Scale::chain({"0", "1/2", "1"})}});
  CHECK(space.size() == 45);

  CHECK(kind_of([] { build_space({{"x", Scale::binary()}}, 1); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { Scale::poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }) == ErrorKind::MalformedScale);
  CHECK(kind_of([] { hiring().param_index("q"); }) == ErrorKind::UnknownParameter);
}

TEST_CASE("projection agendas") {
  auto h = hiring();
  CHECK(projection_agenda(h, {}).partition.is_top());
  auto pr = projection_agenda(h, {"p", "r"}).partition;
  CHECK(pr.block_count() == 4);
  for (const auto& b : pr.blocks()) CHECK(b.size() == 2);
  CHECK(projection_agenda(h, {"r", "p", "l"}).partition.is_bottom());
  CHECK(meet(projection_agenda(h, {"p"}).partition, projection_agenda(h, {"r"}).partition) == pr);
  CHECK(describe(projection_agenda(h, {"r", "p"}).descriptor) == "e_{p,r}");
}

TEST_CASE("sum agendas and thresholds") {
  auto c = car();
  auto x = sum_agenda(c, {"s", "f", "p", "t", "m"}).partition;
  CHECK(x.block_count() == 6);
  auto C1 = c.index_of({1, 0, 1, 0, 1}), C2 = c.index_of({0, 1, 0, 1, 0});
  CHECK(x.block_of(C2) == 2);
  CHECK(x.block_of(C1) == 3);
  CHECK(sum_agenda(c, {"f"}).partition == projection_agenda(c, {"f"}).partition);
  CHECK(sum_agenda(c, {}).partition.is_top());
  CHECK(threshold_issue(c, {"f"}, 0).partition == projection_agenda(c, {"f"}).partition);
  auto two = meet(threshold_issue(c, {"s", "f"}, 0).partition, threshold_issue(c, {"s", "f"}, 1).partition);
  CHECK(two == sum_agenda(c, {"s", "f"}).partition);
  CHECK(two.block_count() == 3);
  CHECK(classify_irreducible(threshold_issue(c, {"s", "f", "p"}, 1).partition) == IrreducibleClass::Coatom);
  CHECK(thresholds(c, {"s", "f", "p"}).size() == 3);
  CHECK(kind_of([&] { threshold_issue(c, {"s"}, 1); }) == ErrorKind::DegenerateThreshold);

  for (const auto& Y : nonempty_subsets({"s", "f", "p", "t", "m"})) CHECK(sum_agenda(c, Y).partition == sum_oracle(c, Y));
  auto hv = halves(3);
  for (const auto& Y : nonempty_subsets({"x", "y", "z"})) CHECK(sum_agenda(hv, Y).partition == sum_oracle(hv, Y));
}

TEST_CASE("sum decomposition") {
  auto c = car();
  for (const auto& Y : nonempty_subsets({"s", "f", "p", "t", "m"})) CHECK(sum_decomposition_check(c, Y));
  auto hv = halves(3);
  for (const auto& Y : nonempty_subsets({"x", "y", "z"})) CHECK(sum_decomposition_check(hv, Y));
}

TEST_CASE("rule preorders") {
  auto h = hiring();
  auto john = h.index_of({1, 1, 0}), mary = h.index_of({0, 1, 1});
  auto dom = rule_preorder(h, Rule::TotalDominance, {"r", "p", "l"});
  CHECK_FALSE(dom.le(john, mary));
  CHECK_FALSE(dom.le(mary, john));
  auto c = car();
  auto C1 = c.index_of({1, 0, 1, 0, 1}), C2 = c.index_of({0, 1, 0, 1, 0});
  auto A = rule_preorder(c, Rule::Sum, {"s", "f", "p"});
  CHECK(A.le(C2, C1));
  CHECK_FALSE(A.le(C1, C2));
  CHECK(rule_preorder(c, Rule::Sum, {}) == Preorder::total(32));
  CHECK(rule_preorder(h, Rule::TotalDominance, {}) == Preorder::total(8));
  auto sumX = rule_preorder(c, Rule::Sum, {"s", "f", "p", "t", "m"});
  CHECK(equiv_from_preorder(sumX).block_count() == 6);
}

TEST_CASE("preferences on the hiring space") {
  auto h = hiring();
  auto john = h.index_of({1, 1, 0}), mary = h.index_of({0, 1, 1});
  auto e_a = projection_agenda(h, {"p", "r"}).partition, e_b = projection_agenda(h, {"r", "l"}).partition;
  CHECK(prefers(e_a, h.dominance(), john, mary) == Preference::PrefersU);
  CHECK(prefers(e_b, h.dominance(), john, mary) == Preference::Incomparable);
  for (const auto& Y : nonempty_subsets({"r", "p", "l"})) {
    auto eY = projection_agenda(h, Y).partition;
    auto pre = rule_preorder(h, Rule::TotalDominance, Y);
    CHECK(equiv_from_preorder(pre) == eY);
    CHECK(preorder_from_equiv(eY, h.dominance()).order == pre);
    CHECK(compatibility(equiv_from_preorder(h.dominance()), h.dominance()) == Compatibility::StronglyCompatible);
    for (const auto& Y2 : nonempty_subsets({"r", "p", "l"})) {
      bool sub = std::all_of(Y.begin(), Y.end(), [&](const std::string& y) {
        return std::find(Y2.begin(), Y2.end(), y) != Y2.end();
      });
      if (sub) CHECK(composition_contained(projection_agenda(h, Y2).partition, pre));
    }
  }
}

TEST_CASE("decisions") {
  auto h = hiring();
  auto john = h.index_of({1, 1, 0}), mary = h.index_of({0, 1, 1});
  auto d = [&](std::vector<std::string> Y) { return decide(h, Rule::TotalDominance, projection_agenda(h, Y), john, mary); };
  CHECK(d({"r"}) == Verdict::PrefersFirst);
  CHECK(d({"p", "l"}) == Verdict::PrefersSecond);
  CHECK(d({"p", "r"}) == Verdict::PrefersFirst);
  CHECK(d({"r", "l"}) == Verdict::NoDecision);
  CHECK(d({"p"}) == Verdict::Tie);

  auto c = car();
  auto C1 = c.index_of({1, 0, 1, 0, 1}), C2 = c.index_of({0, 1, 0, 1, 0});
  CHECK(decide(c, Rule::Sum, sum_agenda(c, {"f"}), C1, C2) == Verdict::PrefersSecond);
  CHECK(decide(c, Rule::Sum, sum_agenda(c, {"s", "f", "p", "t", "m"}), C1, C2) == Verdict::PrefersFirst);
  CHECK(decide(c, Rule::Sum, sum_agenda(c, {}), C1, C2) == Verdict::Tie);
  CHECK(kind_of([&] { decide(c, Rule::Sum, sum_agenda(c, {"f"}), 99, C2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("N5 and many-valued scales") {
  auto n5 = Scale::poset({"0", "1/3", "2/3", "1", "u"}, {{"0", "1/3"}, {"1/3", "2/3"}, {"2/3", "1"}, {"0", "u"}, {"u", "1"}});
  auto chain3 = Scale::chain({"0", "1/2", "1"});
  auto space = build_space({{"r", n5}, {"p", chain3}, {"l", chain3}});
  auto john = space.index_of({*n5.index_of("2/3"), 2, 1}), mary = space.index_of({*n5.index_of("u"), 2, 2});
  auto d = [&](std::vector<std::string> Y) { return decide(space, Rule::TotalDominance, projection_agenda(space, Y), john, mary); };
  CHECK(d({"r"}) == Verdict::NoDecision);
  CHECK(d({"l"}) == Verdict::PrefersSecond);
  CHECK(d({"p", "l"}) == Verdict::PrefersSecond);
  CHECK(d({"p"}) == Verdict::Tie);
  CHECK(kind_of([&] { sum_agenda(space, {"r"}); }) == ErrorKind::NonLinearScale);
}

TEST_CASE("equivariance witness") {
  auto r = equivariance_witness_check(car());
  CHECK(r.sum_U_is_total);
  CHECK(r.sum_U2_is_identity);
  CHECK(r.g_preserves_e_s);
  CHECK(r.g_preserves_e_f);
  CHECK(r.all());
  CHECK(r.sum_U.size() == 4);
  CHECK(r.sum_U2.size() == 2);
  CHECK(kind_of([] { equivariance_witness_check(binary_space({"a", "b"})); }) == ErrorKind::WrongSpace);
}
