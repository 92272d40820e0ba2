#include "agenda/frames.hpp"

#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "agenda/error.hpp"

namespace agenda {

using nlohmann::json;

RelationalStructure::RelationalStructure(std::vector<std::string> C, std::vector<std::string> D)
    : C_(std::move(C)), D_(std::move(D)) {
  I_.assign(nc() * nc(), 0);
  R_.assign(nd() * nc(), 0);
  S_.assign(nd() * nc() * nd(), 0);
}

namespace {

std::size_t lookup(const std::vector<std::string>& names, const std::string& x, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == x) return i;
  throw Error(ErrorKind::Validation, std::string("unknown ") + what + " " + x);
}

void check_unique(const std::vector<std::string>& names, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = i + 1; k < names.size(); ++k)
      if (names[i] == names[k]) throw Error(ErrorKind::Validation, std::string("duplicate ") + what + " " + names[i]);
}

}  // namespace

RelationalStructure RelationalStructure::from_names(std::vector<std::string> C, std::vector<std::string> D,
                                                    const std::vector<std::pair<std::string, std::string>>& I,
                                                    const std::vector<std::pair<std::string, std::string>>& R,
                                                    const std::vector<std::array<std::string, 3>>& S) {
  check_unique(C, "agent");
  check_unique(D, "issue");
  RelationalStructure F(std::move(C), std::move(D));
  for (const auto& [i, j] : I) F.set_I(lookup(F.C_, i, "agent"), lookup(F.C_, j, "agent"));
  for (const auto& [m, j] : R) F.set_R(lookup(F.D_, m, "issue"), lookup(F.C_, j, "agent"));
  for (const auto& t : S) F.set_S(lookup(F.D_, t[0], "issue"), lookup(F.C_, t[1], "agent"), lookup(F.D_, t[2], "issue"));
  return F;
}

RelationalStructure RelationalStructure::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  try {
    auto C = j.at("C").get<std::vector<std::string>>();
    auto D = j.at("D").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> I, R;
    std::vector<std::array<std::string, 3>> S;
    for (const auto& p : j.value("I", json::array())) I.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    for (const auto& p : j.value("R", json::array())) R.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    for (const auto& p : j.value("S", json::array()))
      S.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>(), p.at(2).get<std::string>()});
    return from_names(std::move(C), std::move(D), I, R, S);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, e.what());
  }
}

std::string RelationalStructure::to_json() const {
  json j;
  j["C"] = C_;
  j["D"] = D_;
  j["I"] = json::array();
  j["R"] = json::array();
  j["S"] = json::array();
  for (std::size_t i = 0; i < nc(); ++i)
    for (std::size_t k = 0; k < nc(); ++k)
      if (I(i, k)) j["I"].push_back({C_[i], C_[k]});
  for (std::size_t m = 0; m < nd(); ++m)
    for (std::size_t k = 0; k < nc(); ++k)
      if (R(m, k)) j["R"].push_back({D_[m], C_[k]});
  for (std::size_t n = 0; n < nd(); ++n)
    for (std::size_t k = 0; k < nc(); ++k)
      for (std::size_t m = 0; m < nd(); ++m)
        if (S(n, k, m)) j["S"].push_back({D_[n], C_[k], D_[m]});
  return j.dump();
}

std::string RelationalStructure::to_string() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  os << "C={" << list(C_) << "} D={" << list(D_) << "} I={";
  bool first = true;
  for (std::size_t i = 0; i < nc(); ++i)
    for (std::size_t k = 0; k < nc(); ++k)
      if (I(i, k)) os << (std::exchange(first, false) ? "" : ",") << "(" << C_[i] << "," << C_[k] << ")";
  os << "} R={";
  first = true;
  for (std::size_t m = 0; m < nd(); ++m)
    for (std::size_t k = 0; k < nc(); ++k)
      if (R(m, k)) os << (std::exchange(first, false) ? "" : ",") << "(" << D_[m] << "," << C_[k] << ")";
  os << "} S={";
  first = true;
  for (std::size_t n = 0; n < nd(); ++n)
    for (std::size_t k = 0; k < nc(); ++k)
      for (std::size_t m = 0; m < nd(); ++m)
        if (S(n, k, m)) os << (std::exchange(first, false) ? "" : ",") << "(" << D_[n] << "," << C_[k] << "," << D_[m] << ")";
  os << "}";
  return os.str();
}

TwoSortedAlgebra complex_algebra(const RelationalStructure& F, std::size_t max_issues) {
  if (F.nd() > max_issues) throw Error(ErrorKind::CapExceeded, "too many issues for the complex algebra");
  if (F.nc() == 0 || F.nc() > 12) throw Error(ErrorKind::CapExceeded, "complex algebra needs 1..12 agents");
  const std::size_t nd = F.nd(), nc = F.nc(), n = std::size_t{1} << nd;
  TwoSortedAlgebra::Spec s;
  s.agents = nc;
  s.I = InfluenceRelation(nc);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (F.I(i, j)) s.I.add(i, j);
  s.elements = n;
  s.le.resize(n * n);
  s.meet.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      s.le[a * n + b] = (a | b) == a;
      s.meet[a * n + b] = static_cast<std::uint32_t>(a | b);
    }
  s.top = 0;
  for (std::size_t m = 0; m < nd; ++m) s.generators.push_back(static_cast<std::uint32_t>(1u << m));
  s.relevant.resize(nc);
  s.subst.assign(nc, std::vector<std::vector<std::uint32_t>>(nd));
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t m = 0; m < nd; ++m) {
      if (F.R(m, j)) s.relevant[j].push_back(static_cast<std::uint32_t>(m));
      for (std::size_t k = 0; k < nd; ++k)
        if (F.S(k, j, m)) s.subst[j][m].push_back(static_cast<std::uint32_t>(k));
    }
  for (std::size_t a = 0; a < n; ++a) {
    std::string l = "{";
    for (std::size_t m = 0; m < nd; ++m)
      if (a >> m & 1u) l += (l.size() > 1 ? "," : "") + F.issues()[m];
    s.labels.push_back(l + "}");
  }
  s.agent_names = F.agents();
  return TwoSortedAlgebra(std::move(s));
}

const std::vector<Condition>& all_conditions() {
  static const std::vector<Condition> all = {
      Condition::Symmetric,       Condition::Antisymmetric,   Condition::Unanimous,         Condition::Reflexive,
      Condition::Transitive,      Condition::GloballyIndifferent, Condition::Euclidean,     Condition::SingleStepped,
      Condition::ReasonablyDuctile, Condition::PosCoherent,   Condition::NegCoherent,       Condition::NegPrefCoherent,
      Condition::PosPrefCoherent, Condition::Equanimous,      Condition::Bicoherent,        Condition::Intransigent,
      Condition::IPosCoherent,    Condition::INegCoherent,    Condition::IRSCoherent};
  return all;
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::Symmetric: return "symmetric";
    case Condition::Antisymmetric: return "antisymmetric";
    case Condition::Unanimous: return "unanimous";
    case Condition::Reflexive: return "reflexive";
    case Condition::Transitive: return "transitive";
    case Condition::GloballyIndifferent: return "globally_indifferent";
    case Condition::Euclidean: return "euclidean";
    case Condition::SingleStepped: return "single_stepped";
    case Condition::ReasonablyDuctile: return "reasonably_ductile";
    case Condition::PosCoherent: return "pos_coherent";
    case Condition::NegCoherent: return "neg_coherent";
    case Condition::NegPrefCoherent: return "neg_pref_coherent";
    case Condition::PosPrefCoherent: return "pos_pref_coherent";
    case Condition::Equanimous: return "equanimous";
    case Condition::Bicoherent: return "bicoherent";
    case Condition::Intransigent: return "intransigent";
    case Condition::IPosCoherent: return "I_pos_coherent";
    case Condition::INegCoherent: return "I_neg_coherent";
    case Condition::IRSCoherent: return "IRS_coherent";
  }
  return "?";
}

std::optional<Condition> condition_from_name(const std::string& name) {
  for (auto c : all_conditions())
    if (condition_name(c) == name) return c;
  return std::nullopt;
}

bool check_condition(const RelationalStructure& F, Condition c) {
  const std::size_t nc = F.nc(), nd = F.nd();
  auto forall_jmn = [&](auto&& pred) {
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t m = 0; m < nd; ++m)
        for (std::size_t n = 0; n < nd; ++n)
          if (!pred(j, m, n)) return false;
    return true;
  };
  auto forall_jmno = [&](auto&& pred) {
    return forall_jmn([&](std::size_t j, std::size_t m, std::size_t n) {
      for (std::size_t o = 0; o < nd; ++o)
        if (!pred(j, m, n, o)) return false;
      return true;
    });
  };
  auto forall_jimn = [&](auto&& pred) {
    return forall_jmn([&](std::size_t j, std::size_t m, std::size_t n) {
      for (std::size_t i = 0; i < nc; ++i)
        if (!pred(j, i, m, n)) return false;
      return true;
    });
  };
  switch (c) {
    case Condition::Symmetric:
      return forall_jmn([&](auto j, auto m, auto n) { return !F.S(n, j, m) || F.S(m, j, n); });
    case Condition::Antisymmetric:
      return forall_jmn([&](auto j, auto m, auto n) { return !(F.S(n, j, m) && F.S(m, j, n)) || m == n; });
    case Condition::Unanimous:
      return forall_jimn([&](auto j, auto i, auto m, auto n) { return !F.S(m, j, n) || F.S(m, i, n); });
    case Condition::Reflexive:
      return forall_jmn([&](auto j, auto m, auto) { return F.S(m, j, m); });
    case Condition::Transitive:
      return forall_jmno([&](auto j, auto m, auto n, auto o) { return !(F.S(n, j, m) && F.S(o, j, n)) || F.S(o, j, m); });
    case Condition::GloballyIndifferent:
      return forall_jmn([&](auto j, auto m, auto n) { return F.S(m, j, n); });
    case Condition::Euclidean:
      return forall_jmno([&](auto j, auto m, auto n, auto o) { return !(F.S(n, j, m) && F.S(o, j, m)) || F.S(n, j, o); });
    case Condition::SingleStepped:
      // (m1, m2, n) = (m, o, n)
      return forall_jmno([&](auto j, auto m, auto n, auto o) { return !(F.S(n, j, m) && F.S(o, j, n)) || n == o; });
    case Condition::ReasonablyDuctile:
      return forall_jimn([&](auto j, auto i, auto m, auto n) {
        return !(F.I(j, i) && F.R(m, j) && F.R(m, i) && F.R(n, j)) || F.S(n, i, m);
      });
    case Condition::PosCoherent:
      return forall_jmn([&](auto j, auto m, auto) { return !F.R(m, j) || F.S(m, j, m); });
    case Condition::NegCoherent:
      return forall_jmn([&](auto j, auto m, auto) { return !F.S(m, j, m) || F.R(m, j); });
    case Condition::NegPrefCoherent:
      return forall_jmn([&](auto j, auto m, auto n) { return !F.S(n, j, m) || F.R(n, j); });
    case Condition::PosPrefCoherent:
      return forall_jmn([&](auto j, auto m, auto n) { return !F.R(n, j) || F.S(n, j, m); });
    case Condition::Equanimous:
      return forall_jmn([&](auto j, auto m, auto n) { return !(F.R(m, j) && F.R(n, j)) || F.S(n, j, m); });
    case Condition::Bicoherent:
      return forall_jmn([&](auto j, auto m, auto n) { return !(F.R(m, j) && !F.R(n, j)) || F.S(m, j, n); });
    case Condition::Intransigent:
      return forall_jmn([&](auto j, auto m, auto n) { return !(F.R(m, j) && F.S(n, j, m)) || m == n; });
    case Condition::IPosCoherent:
      return forall_jimn([&](auto j, auto i, auto m, auto n) { return !(F.S(m, j, n) && F.I(j, i)) || F.S(m, i, n); });
    case Condition::INegCoherent:
      return forall_jimn([&](auto j, auto i, auto m, auto n) { return !(!F.S(m, j, n) && F.I(j, i)) || !F.S(m, i, n); });
    case Condition::IRSCoherent:
      return forall_jimn([&](auto j, auto i, auto m, auto n) { return !(F.R(n, j) && F.I(j, i)) || F.S(n, i, m); });
  }
  return false;
}

namespace {

using namespace term;

Term mk(Op op, Term a = nullptr, Term b = nullptr) { return make(op, std::move(a), std::move(b)); }

std::vector<CorrespondenceItem> build_items() {
  auto t = atom_c(0);
  auto q = atom_ia(0), q1 = atom_ia(0), q2 = atom_ia(1);
  return {
      {"1", Condition::Symmetric, make_sequent(mk(Op::Star, q1, q2), mk(Op::Star, q2, q1))},
      {"2", Condition::PosCoherent, make_sequent(mk(Op::BlackSquare, q), mk(Op::Star, q, q))},
      {"3", Condition::NegCoherent, make_sequent(mk(Op::Star, q, q), mk(Op::BlackSquare, q))},
      {"4", Condition::NegPrefCoherent, make_sequent(mk(Op::Diamond, t), mk(Op::Pdra, t, tau()))},
      {"5", Condition::PosPrefCoherent, make_sequent(mk(Op::Pdra, t, bot_ia()), mk(Op::Diamond, t))},
      {"6", Condition::Intransigent, make_sequent(mk(Op::BlackSquare, q), mk(Op::BrB, q, q))},
      {"7", Condition::Equanimous, make_sequent(mk(Op::BlackSquare, mk(Op::Meet, q1, q2)), mk(Op::Star, q1, q2))},
      {"8", Condition::GloballyIndifferent, make_sequent(top_c(), mk(Op::Star, bot_ia(), bot_ia()))},
      {"9", Condition::IPosCoherent, make_sequent(mk(Op::Pdra, mk(Op::DiamDotB, t), q), mk(Op::Pdra, t, q))},
      {"10", Condition::INegCoherent, make_sequent(mk(Op::Pdra, mk(Op::DiamDot, t), q), mk(Op::Pdra, t, q))},
      {"11", Condition::IRSCoherent,
       make_sequent(mk(Op::BlackSquare, q), mk(Op::BoxDot, mk(Op::Star, q, bot_ia())))},
  };
}

std::vector<CorrespondenceItem> build_alternates() {
  auto t = atom_c(0);
  auto q = atom_ia(0);
  return {
      {"1b", Condition::Symmetric, make_sequent(mk(Op::EqLess, t, q), mk(Op::Pdra, t, q))},
      {"4fix", Condition::NegPrefCoherent, make_sequent(mk(Op::Rhd, t), mk(Op::Br, t, bot_ia()))},
      {"11fix", Condition::IRSCoherent,
       make_sequent(mk(Op::BlackSquare, q), mk(Op::BoxDot, mk(Op::Star, bot_ia(), q)))},
  };
}

}  // namespace

const std::vector<CorrespondenceItem>& correspondence_items() {
  static const auto items = build_items();
  return items;
}

const std::vector<CorrespondenceItem>& alternate_items() {
  static const auto items = build_alternates();
  return items;
}

PairReport correspondence_pair(const RelationalStructure& F, const TwoSortedAlgebra& A, const CorrespondenceItem& item) {
  PairReport r;
  r.fo = check_condition(F, item.condition);
  auto v = check_validity(A, item.axiom, 2);
  r.axiom = v.valid;
  r.counterexample = v.counterexample;
  return r;
}

PairReport correspondence_pair(const RelationalStructure& F, const CorrespondenceItem& item) {
  if (F.nc() > 3 || F.nd() > 3) throw Error(ErrorKind::CapExceeded, "correspondence checks limited to |C|,|D| <= 3");
  return correspondence_pair(F, complex_algebra(F), item);
}

bool SweepReport::all_agree(bool include_alternates) const {
  const std::size_t n = include_alternates ? items.size() : correspondence_items().size();
  for (std::size_t k = 0; k < n && k < items.size(); ++k)
    if (items[k].disagreements) return false;
  return true;
}

namespace {

std::vector<const CorrespondenceItem*> sweep_items(bool with_alternates) {
  std::vector<const CorrespondenceItem*> v;
  for (const auto& it : correspondence_items()) v.push_back(&it);
  if (with_alternates)
    for (const auto& it : alternate_items()) v.push_back(&it);
  return v;
}

RelationalStructure blank(std::size_t nc, std::size_t nd) {
  std::vector<std::string> C, D;
  for (std::size_t j = 0; j < nc; ++j) C.push_back("j" + std::to_string(j + 1));
  for (std::size_t m = 0; m < nd; ++m) D.push_back("m" + std::to_string(m + 1));
  return RelationalStructure(std::move(C), std::move(D));
}

void tally(const RelationalStructure& F, const std::vector<const CorrespondenceItem*>& its, SweepReport& rep) {
  auto A = complex_algebra(F);
  for (std::size_t k = 0; k < its.size(); ++k) {
    auto r = correspondence_pair(F, A, *its[k]);
    if (!r.agree()) {
      auto& item = rep.items[k];
      if (item.disagreements++ == 0) item.witness = F;
    }
  }
  ++rep.structures;
}

SweepReport empty_report(const std::vector<const CorrespondenceItem*>& its) {
  SweepReport rep;
  for (auto* it : its) rep.items.push_back({it->id, 0, std::nullopt});
  return rep;
}

}  // namespace

SweepReport exhaustive_sweep(std::size_t max_c, std::size_t max_d, bool with_alternates) {
  if (max_c > 2 || max_d > 2) throw Error(ErrorKind::CapExceeded, "exhaustive sweep limited to |C|,|D| <= 2");
  auto its = sweep_items(with_alternates);
  auto rep = empty_report(its);
  for (std::size_t nc = 1; nc <= max_c; ++nc)
    for (std::size_t nd = 1; nd <= max_d; ++nd) {
      const std::size_t bi = nc * nc, br = nd * nc, bs = nd * nc * nd;
      const std::uint64_t total = std::uint64_t{1} << (bi + br + bs);
      for (std::uint64_t code = 0; code < total; ++code) {
        auto F = blank(nc, nd);
        std::uint64_t x = code;
        for (std::size_t i = 0; i < nc; ++i)
          for (std::size_t j = 0; j < nc; ++j, x >>= 1) F.set_I(i, j, x & 1u);
        for (std::size_t m = 0; m < nd; ++m)
          for (std::size_t j = 0; j < nc; ++j, x >>= 1) F.set_R(m, j, x & 1u);
        for (std::size_t n = 0; n < nd; ++n)
          for (std::size_t j = 0; j < nc; ++j)
            for (std::size_t m = 0; m < nd; ++m, x >>= 1) F.set_S(n, j, m, x & 1u);
        tally(F, its, rep);
      }
    }
  return rep;
}

SweepReport random_sweep(std::size_t nc, std::size_t nd, std::size_t count, std::uint64_t seed, bool with_alternates) {
  if (nc > 3 || nd > 3) throw Error(ErrorKind::CapExceeded, "random sweep limited to |C|,|D| <= 3");
  auto its = sweep_items(with_alternates);
  auto rep = empty_report(its);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t s = 0; s < count; ++s) {
    auto F = blank(nc, nd);
    const double pi = unit(rng), pr = unit(rng), ps = unit(rng);
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) F.set_I(i, j, unit(rng) < pi);
    for (std::size_t m = 0; m < nd; ++m)
      for (std::size_t j = 0; j < nc; ++j) F.set_R(m, j, unit(rng) < pr);
    for (std::size_t n = 0; n < nd; ++n)
      for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t m = 0; m < nd; ++m) F.set_S(n, j, m, unit(rng) < ps);
    tally(F, its, rep);
  }
  return rep;
}

RelationalStructure disjoint_union(const RelationalStructure& F1, const RelationalStructure& F2) {
  std::vector<std::string> C, D;
  for (const auto& c : F1.agents()) C.push_back("1." + c);
  for (const auto& c : F2.agents()) C.push_back("2." + c);
  for (const auto& d : F1.issues()) D.push_back("1." + d);
  for (const auto& d : F2.issues()) D.push_back("2." + d);
  RelationalStructure U(std::move(C), std::move(D));
  auto copy = [&](const RelationalStructure& F, std::size_t oc, std::size_t od) {
    for (std::size_t i = 0; i < F.nc(); ++i)
      for (std::size_t j = 0; j < F.nc(); ++j)
        if (F.I(i, j)) U.set_I(oc + i, oc + j);
    for (std::size_t m = 0; m < F.nd(); ++m)
      for (std::size_t j = 0; j < F.nc(); ++j) {
        if (F.R(m, j)) U.set_R(od + m, oc + j);
        for (std::size_t n = 0; n < F.nd(); ++n)
          if (F.S(n, j, m)) U.set_S(od + n, oc + j, od + m);
      }
  };
  copy(F1, 0, 0);
  copy(F2, F1.nc(), F1.nd());
  return U;
}

ForthReport check_forth_morphism(const std::vector<std::size_t>& fC, const std::vector<std::size_t>& fD,
                                 const RelationalStructure& F1, const RelationalStructure& F2) {
  if (fC.size() != F1.nc() || fD.size() != F1.nd()) throw Error(ErrorKind::Validation, "map is not total");
  for (auto x : fC)
    if (x >= F2.nc()) throw Error(ErrorKind::IndexOutOfRange, "agent image");
  for (auto x : fD)
    if (x >= F2.nd()) throw Error(ErrorKind::IndexOutOfRange, "issue image");
  ForthReport r;
  std::vector<bool> hitC(F2.nc()), hitD(F2.nd());
  for (auto x : fC) hitC[x] = true;
  for (auto x : fD) hitD[x] = true;
  r.surjective = std::all_of(hitC.begin(), hitC.end(), [](bool b) { return b; }) &&
                 std::all_of(hitD.begin(), hitD.end(), [](bool b) { return b; });
  r.forth_I = r.forth_R = r.forth_S = true;
  for (std::size_t i = 0; i < F1.nc(); ++i)
    for (std::size_t j = 0; j < F1.nc(); ++j)
      if (F1.I(i, j) && !F2.I(fC[i], fC[j])) r.forth_I = false;
  for (std::size_t m = 0; m < F1.nd(); ++m)
    for (std::size_t j = 0; j < F1.nc(); ++j) {
      if (F1.R(m, j) && !F2.R(fD[m], fC[j])) r.forth_R = false;
      for (std::size_t n = 0; n < F1.nd(); ++n)
        if (F1.S(n, j, m) && !F2.S(fD[n], fC[j], fD[m])) r.forth_S = false;
    }
  return r;
}

namespace {

using Sig = std::vector<std::uint32_t>;

struct Family {
  std::vector<const TwoSortedAlgebra*> algs;
  std::vector<std::size_t> owner;        // algebra of each signature slot
  std::vector<std::size_t> begin, end;   // slot range per algebra
  std::vector<Term> terms[2];            // 0 = C, 1 = IA
  std::vector<Sig> sigs[2];
  std::map<Sig, std::size_t> seen[2];

  void add(Term t, Sig s) {
    const int k = t->sort == Sort::C ? 0 : 1;
    if (seen[k].emplace(s, terms[k].size()).second) {
      terms[k].push_back(std::move(t));
      sigs[k].push_back(std::move(s));
    }
  }

  template <class F>
  Sig map1(const Sig& a, F f) const {
    Sig r(a.size());
    for (std::size_t p = 0; p < a.size(); ++p) r[p] = f(*algs[owner[p]], a[p]);
    return r;
  }
  template <class F>
  Sig map2(const Sig& a, const Sig& b, F f) const {
    Sig r(a.size());
    for (std::size_t p = 0; p < a.size(); ++p) r[p] = f(*algs[owner[p]], a[p], b[p]);
    return r;
  }

  bool valid(int k, const Sig& a, const Sig& b, std::size_t alg) const {
    const auto& A = *algs[alg];
    for (std::size_t p = begin[alg]; p < end[alg]; ++p)
      if (k == 0 ? (a[p] & ~b[p]) != 0 : !A.le(a[p], b[p])) return false;
    return true;
  }
};

void grow(Family& fam) {
  using A = TwoSortedAlgebra;
  using U = std::uint32_t;
  const auto C = fam.terms[0], IA = fam.terms[1];
  const auto CS = fam.sigs[0], IS = fam.sigs[1];
  struct Pending {
    Term t;
    Sig s;
  };
  std::vector<Pending> out;
  auto un = [&](Op op, const Term& a, const Sig& sa, auto f) { out.push_back({make(op, a), fam.map1(sa, f)}); };
  auto bin = [&](Op op, const Term& a, const Sig& sa, const Term& b, const Sig& sb, auto f) {
    out.push_back({make(op, a, b), fam.map2(sa, sb, f)});
  };
  for (std::size_t x = 0; x < IA.size(); ++x) {
    for (std::size_t y = 0; y < IA.size(); ++y) {
      if (x < y) {
        bin(Op::Meet, IA[x], IS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.meet(u, v); });
        bin(Op::Join, IA[x], IS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.join(u, v); });
      }
      bin(Op::Star, IA[x], IS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.star(u, v); });
      bin(Op::BrB, IA[x], IS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.brB(u, v); });
    }
    un(Op::BlackSquare, IA[x], IS[x], [](const A& a, U u) { return a.bsq(u); });
    un(Op::BlackTri, IA[x], IS[x], [](const A& a, U u) { return a.bltri(u); });
  }
  for (std::size_t x = 0; x < C.size(); ++x) {
    for (std::size_t y = x + 1; y < C.size(); ++y) {
      bin(Op::And, C[x], CS[x], C[y], CS[y], [](const A&, U u, U v) { return u & v; });
      bin(Op::Or, C[x], CS[x], C[y], CS[y], [](const A&, U u, U v) { return u | v; });
    }
    un(Op::Not, C[x], CS[x], [](const A& a, U u) { return a.full() & ~u; });
    un(Op::DiamDot, C[x], CS[x], [](const A& a, U u) { return a.diamdot(u); });
    un(Op::DiamDotB, C[x], CS[x], [](const A& a, U u) { return a.diamdotb(u); });
    un(Op::BoxDot, C[x], CS[x], [](const A& a, U u) { return a.boxdot(u); });
    un(Op::BlackSqDot, C[x], CS[x], [](const A& a, U u) { return a.blacksqdot(u); });
    un(Op::Diamond, C[x], CS[x], [](const A& a, U u) { return a.dia(u); });
    un(Op::Rhd, C[x], CS[x], [](const A& a, U u) { return a.rhd(u); });
    for (std::size_t y = 0; y < IA.size(); ++y) {
      bin(Op::Pdra, C[x], CS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.pdra(u, v); });
      bin(Op::EqLess, C[x], CS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.eqless(u, v); });
      bin(Op::Br, C[x], CS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.br(u, v); });
      bin(Op::Triangle, C[x], CS[x], IA[y], IS[y], [](const A& a, U u, U v) { return a.tri(u, v); });
    }
  }
  for (auto& p : out) fam.add(std::move(p.t), std::move(p.s));
}

}  // namespace

EquivalenceReport bounded_modal_equivalence(const std::vector<const TwoSortedAlgebra*>& lhs,
                                            const std::vector<const TwoSortedAlgebra*>& rhs, int depth, int atom_cap) {
  if (lhs.empty() || rhs.empty()) throw Error(ErrorKind::Validation, "empty comparison side");
  if (depth < 0 || depth > 2 || atom_cap < 1 || atom_cap > 2)
    throw Error(ErrorKind::CapExceeded, "term family limited to depth <= 2 and <= 2 atoms per sort");
  Family fam;
  for (auto* a : lhs) fam.algs.push_back(a);
  for (auto* a : rhs) fam.algs.push_back(a);
  const std::size_t k = static_cast<std::size_t>(atom_cap);
  // valuations per algebra: all assignments of k C-atoms and k IA-atoms
  std::vector<Valuation> vals;
  for (std::size_t ai = 0; ai < fam.algs.size(); ++ai) {
    const auto& A = *fam.algs[ai];
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= A.coalitions() * A.elements();
    if (total > 4096) throw Error(ErrorKind::CapExceeded, "too many valuations");
    fam.begin.push_back(vals.size());
    for (std::uint64_t code = 0; code < total; ++code) {
      Valuation v;
      std::uint64_t x = code;
      for (std::size_t i = 0; i < k; ++i) v.c.push_back(static_cast<std::uint32_t>(x % A.coalitions())), x /= A.coalitions();
      for (std::size_t i = 0; i < k; ++i) v.ia.push_back(static_cast<std::uint32_t>(x % A.elements())), x /= A.elements();
      vals.push_back(std::move(v));
      fam.owner.push_back(ai);
    }
    fam.end.push_back(vals.size());
  }
  auto leaf = [&](Term t) {
    Sig s(vals.size());
    for (std::size_t p = 0; p < vals.size(); ++p) s[p] = eval_term(*fam.algs[fam.owner[p]], vals[p], t);
    fam.add(t, std::move(s));
  };
  for (int i = 0; i < atom_cap; ++i) {
    leaf(term::atom_c(i));
    leaf(term::atom_ia(i));
  }
  leaf(term::top_c());
  leaf(term::bot_c());
  leaf(term::tau());
  leaf(term::bot_ia());
  for (int d = 0; d < depth; ++d) grow(fam);

  EquivalenceReport rep;
  rep.c_terms = fam.terms[0].size();
  rep.ia_terms = fam.terms[1].size();
  const std::size_t nl = lhs.size();
  for (int s = 1; s >= 0; --s) {
    const auto& sigs = fam.sigs[s];
    for (std::size_t x = 0; x < sigs.size(); ++x)
      for (std::size_t y = 0; y < sigs.size(); ++y) {
        ++rep.sequents;
        bool l = true, r = true;
        for (std::size_t a = 0; a < nl && l; ++a) l = fam.valid(s, sigs[x], sigs[y], a);
        for (std::size_t a = nl; a < fam.algs.size() && r; ++a) r = fam.valid(s, sigs[x], sigs[y], a);
        if (l != r) {
          if (rep.disagreements++ == 0) {
            rep.first = make_sequent(fam.terms[s][x], fam.terms[s][y]);
            rep.lhs_valid = l;
            rep.rhs_valid = r;
          }
        }
      }
  }
  rep.agree = rep.disagreements == 0;
  return rep;
}

EquivalenceReport bounded_modal_equivalence(const RelationalStructure& F1, const RelationalStructure& F2, int depth,
                                            int atom_cap) {
  auto A1 = complex_algebra(F1), A2 = complex_algebra(F2);
  return bounded_modal_equivalence({&A1}, {&A2}, depth, atom_cap);
}

namespace {

using Names = std::vector<std::string>;
using Pairs = std::vector<std::pair<std::string, std::string>>;
using Triples = std::vector<std::array<std::string, 3>>;

GtFixture morphism(int number, Condition c, RelationalStructure F1, RelationalStructure F2, std::vector<std::size_t> fC,
                   std::vector<std::size_t> fD, bool expected_source = true, bool expected_target = false) {
  GtFixture fx;
  fx.number = number;
  fx.kind = FixtureKind::Morphism;
  fx.sources = {std::move(F1)};
  fx.target = std::move(F2);
  fx.map_C = std::move(fC);
  fx.map_D = std::move(fD);
  fx.condition = c;
  fx.expected_source = expected_source;
  fx.expected_target = expected_target;
  return fx;
}

GtFixture union_case(int number, Condition c, RelationalStructure F1, RelationalStructure F2) {
  GtFixture fx;
  fx.number = number;
  fx.kind = FixtureKind::Union;
  fx.target = disjoint_union(F1, F2);
  fx.sources = {std::move(F1), std::move(F2)};
  fx.condition = c;
  return fx;
}

RelationalStructure three_chain(const Names& C, const Triples& S) {
  return RelationalStructure::from_names(C, {"m1", "m2", "m3"}, {}, {}, S);
}

RelationalStructure one_agent_target(const Triples& S) {
  return RelationalStructure::from_names({"i"}, {"n1", "n2", "n3"}, {}, {}, S);
}

}  // namespace

GtFixture gt_fixture(int number, bool require_full) {
  switch (number) {
    case 1:
      return morphism(1, Condition::Transitive,
                      three_chain({"j1", "j2"}, {{"m1", "j1", "m2"}, {"m2", "j2", "m3"}}),
                      one_agent_target({{"n1", "i", "n2"}, {"n2", "i", "n3"}}), {0, 0}, {0, 1, 2});
    case 2: {
      auto F = [](const std::string& k) {
        return RelationalStructure::from_names({"j" + k}, {"m" + k}, {}, {}, {{"m" + k, "j" + k, "m" + k}});
      };
      return union_case(2, Condition::Reflexive, F("1"), F("2"));
    }
    case 3: {
      if (require_full) throw Error(ErrorKind::UnsupportedCase, "case 3 source frame is infinite");
      GtFixture fx;
      fx.number = 3;
      fx.kind = FixtureKind::Morphism;
      fx.target = RelationalStructure::from_names({"i"}, {"n0", "n1"}, {}, {}, {{"n0", "i", "n1"}, {"n1", "i", "n0"}});
      fx.condition = Condition::Antisymmetric;
      fx.partial = true;
      return fx;
    }
    case 4:
      return morphism(4, Condition::SingleStepped,
                      three_chain({"j1", "j2"}, {{"m1", "j1", "m2"}, {"m3", "j2", "m1"}}),
                      one_agent_target({{"n1", "i", "n2"}, {"n3", "i", "n1"}}), {0, 0}, {0, 1, 2});
    case 5:
      return morphism(5, Condition::Euclidean,
                      three_chain({"j1", "j2"}, {{"m1", "j1", "m3"}, {"m2", "j2", "m3"}}),
                      one_agent_target({{"n1", "i", "n3"}, {"n2", "i", "n3"}}), {0, 0}, {0, 1, 2});
    case 6: {
      auto F = [](const std::string& k) {
        return RelationalStructure::from_names({"j" + k}, {"m" + k, "n" + k}, {}, {}, {{"m" + k, "j" + k, "n" + k}});
      };
      return union_case(6, Condition::Unanimous, F("1"), F("2"));
    }
    case 7: {
      auto F = [](const std::string& k) {
        return RelationalStructure::from_names({"j" + k}, {"m" + k}, {}, {{"m" + k, "j" + k}}, {});
      };
      return union_case(7, Condition::Bicoherent, F("1"), F("2"));
    }
    case 8: {
      auto F1 = RelationalStructure::from_names({"j1", "i1"}, {"m1", "m1'", "n1"}, {{"j1", "i1"}},
                                                {{"m1", "j1"}, {"n1", "j1"}, {"m1'", "i1"}}, {});
      auto F2 = RelationalStructure::from_names({"j2", "i2"}, {"m2", "n2"}, {{"j2", "i2"}},
                                                {{"m2", "j2"}, {"n2", "j2"}, {"m2", "i2"}}, {});
      return morphism(8, Condition::ReasonablyDuctile, std::move(F1), std::move(F2), {0, 1}, {0, 0, 1});
    }
    default:
      throw Error(ErrorKind::IndexOutOfRange, "fixture number must be 1..8");
  }
}

bool FixtureReport::passed() const {
  return verdicts_match && (!forth || forth->all()) && (!equivalence || equivalence->agree);
}

FixtureReport check_fixture(const GtFixture& fx, int depth, int atom_cap) {
  FixtureReport r;
  r.verdicts_match = true;
  for (const auto& F : fx.sources) {
    const bool v = check_condition(F, fx.condition);
    r.source_verdicts.push_back(v);
    if (v != fx.expected_source) r.verdicts_match = false;
  }
  r.target_verdict = check_condition(fx.target, fx.condition);
  if (r.target_verdict != fx.expected_target) r.verdicts_match = false;
  if (fx.partial) return r;
  if (fx.kind == FixtureKind::Morphism) r.forth = check_forth_morphism(fx.map_C, fx.map_D, fx.sources[0], fx.target);
  std::vector<TwoSortedAlgebra> algs;
  for (const auto& F : fx.sources) algs.push_back(complex_algebra(F));
  auto T = complex_algebra(fx.target);
  std::vector<const TwoSortedAlgebra*> lhs;
  for (const auto& a : algs) lhs.push_back(&a);
  r.equivalence = bounded_modal_equivalence(lhs, {&T}, depth, atom_cap);
  return r;
}

}  // namespace agenda
