#include "agenda/logic.hpp"

#include <algorithm>
#include <functional>

#include "agenda/error.hpp"

namespace agenda {

TwoSortedAlgebra::TwoSortedAlgebra(Spec s)
    : n_agents_(s.agents), n_coal_(std::size_t{1} << s.agents), n_(s.elements) {
  if (s.agents == 0 || s.agents > 20) throw Error(ErrorKind::CapExceeded, "algebra needs 1..20 agents");
  if (s.le.size() != n_ * n_ || s.meet.size() != n_ * n_) throw Error(ErrorKind::Invariant, "table sizes");
  le_ = std::move(s.le);
  meet_ = std::move(s.meet);
  top_ = s.top;
  labels_ = std::move(s.labels);
  agent_names_ = std::move(s.agent_names);
  if (labels_.size() != n_) {
    labels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) labels_[i] = "#" + std::to_string(i);
  }
  if (agent_names_.size() != n_agents_) {
    agent_names_.resize(n_agents_);
    for (std::size_t j = 0; j < n_agents_; ++j) agent_names_[j] = "j" + std::to_string(j);
  }
  const auto& gens = s.generators;
  const std::size_t g = gens.size();
  auto meet_of = [&](const std::vector<std::uint32_t>& positions) {
    std::uint32_t acc = top_;
    for (auto m : positions) acc = meet(acc, gens[m]);
    return acc;
  };
  std::vector<std::vector<std::uint32_t>> above(n_);
  for (std::uint32_t e = 0; e < n_; ++e)
    for (std::uint32_t m = 0; m < g; ++m)
      if (le(e, gens[m])) above[e].push_back(m);
  std::vector<std::uint32_t> all_gens(g);
  for (std::uint32_t m = 0; m < g; ++m) all_gens[m] = m;
  bot_ = meet_of(all_gens);

  join_.resize(n_ * n_);
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) {
      std::vector<std::uint32_t> common;
      std::set_intersection(above[a].begin(), above[a].end(), above[b].begin(), above[b].end(),
                            std::back_inserter(common));
      join_[a * n_ + b] = meet_of(common);
    }

  const std::size_t na = n_agents_;
  std::vector<std::uint32_t> agent_dia(na);
  std::vector<std::vector<std::uint32_t>> arrow(na, std::vector<std::uint32_t>(g));
  for (std::size_t j = 0; j < na; ++j) {
    agent_dia[j] = meet_of(s.relevant.at(j));
    for (std::size_t m = 0; m < g; ++m) arrow[j][m] = meet_of(s.subst.at(j).at(m));
  }

  dia_.assign(n_coal_, bot_);
  rhd_.assign(n_coal_, top_);
  pdra_.assign(n_coal_ * n_, bot_);
  br_.assign(n_coal_ * n_, top_);
  for (std::size_t c = 1; c < n_coal_; ++c) {
    const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(c));
    const std::size_t rest = c & (c - 1);
    dia_[c] = join(dia_[rest], agent_dia[j]);
    rhd_[c] = meet(rhd_[rest], agent_dia[j]);
    for (std::uint32_t e = 0; e < n_; ++e) {
      std::uint32_t pj = bot_, bj = top_;
      for (auto m : above[e]) {
        pj = join(pj, arrow[j][m]);
        bj = meet(bj, arrow[j][m]);
      }
      pdra_[c * n_ + e] = join(pdra_[rest * n_ + e], pj);
      br_[c * n_ + e] = meet(br_[rest * n_ + e], bj);
    }
  }

  eqless_.assign(n_coal_ * n_, top_);
  tri_.assign(n_coal_ * n_, top_);
  for (std::size_t c = 0; c < n_coal_; ++c)
    for (std::uint32_t e = 0; e < n_; ++e) {
      std::uint32_t q = top_, t = top_;
      for (std::uint32_t x = 0; x < n_; ++x) {
        if (le(pdra_[c * n_ + x], e)) q = meet(q, x);
        if (le(e, br_[c * n_ + x])) t = meet(t, x);
      }
      eqless_[c * n_ + e] = q;
      tri_[c * n_ + e] = t;
    }

  star_.assign(n_ * n_, 0);
  brB_.assign(n_ * n_, 0);
  bsq_.assign(n_, 0);
  bltri_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::size_t j = 0; j < na; ++j) {
      const std::size_t cj = std::size_t{1} << j;
      if (le(dia_[cj], a)) bsq_[a] |= static_cast<std::uint32_t>(cj);
      if (le(a, rhd_[cj])) bltri_[a] |= static_cast<std::uint32_t>(cj);
    }
    for (std::uint32_t b = 0; b < n_; ++b)
      for (std::size_t j = 0; j < na; ++j) {
        const std::size_t cj = std::size_t{1} << j;
        if (le(pdra_[cj * n_ + a], b)) star_[a * n_ + b] |= static_cast<std::uint32_t>(cj);
        if (le(a, br_[cj * n_ + b])) brB_[a * n_ + b] |= static_cast<std::uint32_t>(cj);
      }
  }

  dd_.assign(n_coal_, 0);
  ddb_.assign(n_coal_, 0);
  for (std::size_t c = 0; c < n_coal_; ++c) {
    dd_[c] = static_cast<std::uint32_t>(influencers(s.I, Coalition{c}).bits);
    ddb_[c] = static_cast<std::uint32_t>(audience(s.I, Coalition{c}).bits);
  }
}

std::string TwoSortedAlgebra::coalition_label(std::uint32_t c) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = 0; j < n_agents_; ++j)
    if (c >> j & 1u) {
      out += (first ? "" : ",") + agent_names_[j];
      first = false;
    }
  return out + "}";
}

TwoSortedAlgebra algebra_of(const HeteroStructure& H, std::size_t coalition_cap) {
  if (H.agent_count() > coalition_cap) throw Error(ErrorKind::CapExceeded, "too many agents for tabulation");
  const auto& L = H.lattice;
  const auto& els = L.elements();
  TwoSortedAlgebra::Spec s;
  s.agents = H.agent_count();
  s.I = H.I;
  s.elements = els.size();
  const std::size_t n = els.size();
  s.le.resize(n * n);
  s.meet.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      s.le[a * n + b] = refines(els[a], els[b]);
      s.meet[a * n + b] = static_cast<std::uint32_t>(*L.index_of(meet(els[a], els[b])));
    }
  s.top = static_cast<std::uint32_t>(*L.index_of(L.top()));
  for (std::size_t m = 0; m < L.generator_count(); ++m)
    s.generators.push_back(static_cast<std::uint32_t>(*L.index_of(L.generator(m))));
  auto positions = [](const GenSet& gs) {
    std::vector<std::uint32_t> v;
    for (auto m = gs.find_first(); m != GenSet::npos; m = gs.find_next(m)) v.push_back(static_cast<std::uint32_t>(m));
    return v;
  };
  for (std::size_t j = 0; j < H.agent_count(); ++j) {
    s.relevant.push_back(positions(H.relevant[j]));
    s.subst.emplace_back();
    for (std::size_t m = 0; m < L.generator_count(); ++m) s.subst.back().push_back(positions(H.subst[j][m]));
  }
  for (const auto& e : els) s.labels.push_back(describe(L.as_agenda(e).descriptor));
  s.agent_names = H.agents.names();
  return TwoSortedAlgebra(std::move(s));
}

Sort sort_of(Op op) {
  switch (op) {
    case Op::AtomC: case Op::TopC: case Op::BotC: case Op::And: case Op::Or: case Op::Not: case Op::DiamDot:
    case Op::DiamDotB: case Op::BoxDot: case Op::BlackSqDot: case Op::BlackSquare: case Op::BlackTri: case Op::Star:
    case Op::BrB:
      return Sort::C;
    default:
      return Sort::IA;
  }
}

namespace {

struct Shape {
  int arity;
  Sort a, b;
};

Shape shape(Op op) {
  switch (op) {
    case Op::AtomC: case Op::TopC: case Op::BotC: case Op::AtomIA: case Op::Tau: case Op::BotIA:
      return {0, Sort::C, Sort::C};
    case Op::And: case Op::Or: return {2, Sort::C, Sort::C};
    case Op::Not: case Op::DiamDot: case Op::DiamDotB: case Op::BoxDot: case Op::BlackSqDot: return {1, Sort::C, Sort::C};
    case Op::BlackSquare: case Op::BlackTri: return {1, Sort::IA, Sort::IA};
    case Op::Star: case Op::BrB: case Op::Meet: case Op::Join: return {2, Sort::IA, Sort::IA};
    case Op::Diamond: case Op::Rhd: return {1, Sort::C, Sort::C};
    case Op::Pdra: case Op::EqLess: case Op::Br: case Op::Triangle: return {2, Sort::C, Sort::IA};
  }
  return {0, Sort::C, Sort::C};
}

}  // namespace

namespace term {

Term atom_c(int i) { return std::make_shared<TermNode>(TermNode{Op::AtomC, Sort::C, i, nullptr, nullptr}); }
Term atom_ia(int i) { return std::make_shared<TermNode>(TermNode{Op::AtomIA, Sort::IA, i, nullptr, nullptr}); }

Term make(Op op, Term a, Term b) {
  if (op == Op::AtomC || op == Op::AtomIA) throw Error(ErrorKind::SortError, "use atom constructors");
  auto sh = shape(op);
  const int given = (a != nullptr) + (b != nullptr);
  if (given != sh.arity) throw Error(ErrorKind::SortError, "wrong arity");
  if (sh.arity >= 1 && a->sort != sh.a) throw Error(ErrorKind::SortError, "first argument sort");
  if (sh.arity == 2 && b->sort != sh.b) throw Error(ErrorKind::SortError, "second argument sort");
  return std::make_shared<TermNode>(TermNode{op, sort_of(op), -1, std::move(a), std::move(b)});
}

}  // namespace term

std::string to_string(const Term& t) {
  auto s = [](const Term& x) { return to_string(x); };
  switch (t->op) {
    case Op::AtomC: return "c" + std::to_string(t->atom + 1);
    case Op::AtomIA: return "e" + std::to_string(t->atom + 1);
    case Op::TopC: return "⊤";
    case Op::BotC: return "⊥c";
    case Op::Tau: return "τ";
    case Op::BotIA: return "⊥";
    case Op::And: return "(" + s(t->a) + " ∧ " + s(t->b) + ")";
    case Op::Or: return "(" + s(t->a) + " ∨ " + s(t->b) + ")";
    case Op::Not: return "¬" + s(t->a);
    case Op::DiamDot: return "⋄̇" + s(t->a);
    case Op::DiamDotB: return "⋄̇b " + s(t->a);
    case Op::BoxDot: return "□̇" + s(t->a);
    case Op::BlackSqDot: return "■̇" + s(t->a);
    case Op::BlackSquare: return "■" + s(t->a);
    case Op::BlackTri: return "▶" + s(t->a);
    case Op::Star: return "(" + s(t->a) + " ⋆ " + s(t->b) + ")";
    case Op::BrB: return "(" + s(t->a) + " ▶̄ " + s(t->b) + ")";
    case Op::Meet: return "(" + s(t->a) + " ⊓ " + s(t->b) + ")";
    case Op::Join: return "(" + s(t->a) + " ⊔ " + s(t->b) + ")";
    case Op::Diamond: return "⋄" + s(t->a);
    case Op::Rhd: return "▷" + s(t->a);
    case Op::Pdra: return "(" + s(t->a) + " −< " + s(t->b) + ")";
    case Op::EqLess: return "(" + s(t->a) + " =< " + s(t->b) + ")";
    case Op::Br: return "(" + s(t->a) + " ▷̄ " + s(t->b) + ")";
    case Op::Triangle: return "(" + s(t->a) + " △ " + s(t->b) + ")";
  }
  return "?";
}

Sequent make_sequent(Term lhs, Term rhs) {
  if (lhs->sort != rhs->sort) throw Error(ErrorKind::SortError, "sequent sides differ in sort");
  return {std::move(lhs), std::move(rhs)};
}

std::string to_string(const Sequent& s) { return to_string(s.lhs) + " ⊢ " + to_string(s.rhs); }

std::uint32_t eval_term(const TwoSortedAlgebra& A, const Valuation& v, const Term& t) {
  auto ev = [&](const Term& x) { return eval_term(A, v, x); };
  switch (t->op) {
    case Op::AtomC:
      if (t->atom < 0 || static_cast<std::size_t>(t->atom) >= v.c.size())
        throw Error(ErrorKind::UnassignedAtom, to_string(t));
      return v.c[static_cast<std::size_t>(t->atom)] & A.full();
    case Op::AtomIA:
      if (t->atom < 0 || static_cast<std::size_t>(t->atom) >= v.ia.size())
        throw Error(ErrorKind::UnassignedAtom, to_string(t));
      if (v.ia[static_cast<std::size_t>(t->atom)] >= A.elements()) throw Error(ErrorKind::IndexOutOfRange, "element");
      return v.ia[static_cast<std::size_t>(t->atom)];
    case Op::TopC: return A.full();
    case Op::BotC: return 0;
    case Op::Tau: return A.tau();
    case Op::BotIA: return A.bot();
    case Op::And: return ev(t->a) & ev(t->b);
    case Op::Or: return ev(t->a) | ev(t->b);
    case Op::Not: return A.full() & ~ev(t->a);
    case Op::DiamDot: return A.diamdot(ev(t->a));
    case Op::DiamDotB: return A.diamdotb(ev(t->a));
    case Op::BoxDot: return A.boxdot(ev(t->a));
    case Op::BlackSqDot: return A.blacksqdot(ev(t->a));
    case Op::BlackSquare: return A.bsq(ev(t->a));
    case Op::BlackTri: return A.bltri(ev(t->a));
    case Op::Star: return A.star(ev(t->a), ev(t->b));
    case Op::BrB: return A.brB(ev(t->a), ev(t->b));
    case Op::Meet: return A.meet(ev(t->a), ev(t->b));
    case Op::Join: return A.join(ev(t->a), ev(t->b));
    case Op::Diamond: return A.dia(ev(t->a));
    case Op::Rhd: return A.rhd(ev(t->a));
    case Op::Pdra: return A.pdra(ev(t->a), ev(t->b));
    case Op::EqLess: return A.eqless(ev(t->a), ev(t->b));
    case Op::Br: return A.br(ev(t->a), ev(t->b));
    case Op::Triangle: return A.tri(ev(t->a), ev(t->b));
  }
  throw Error(ErrorKind::Invariant, "unknown operator");
}

bool holds(const TwoSortedAlgebra& A, const Valuation& v, const Sequent& s) {
  auto l = eval_term(A, v, s.lhs), r = eval_term(A, v, s.rhs);
  return s.lhs->sort == Sort::C ? (l & ~r) == 0 : A.le(l, r);
}

AtomCount atoms_of(const Term& t) {
  AtomCount n;
  std::function<void(const Term&)> walk = [&](const Term& x) {
    if (!x) return;
    if (x->op == Op::AtomC) n.c = std::max(n.c, x->atom + 1);
    if (x->op == Op::AtomIA) n.ia = std::max(n.ia, x->atom + 1);
    walk(x->a);
    walk(x->b);
  };
  walk(t);
  return n;
}

ValidityResult check_validity(const TwoSortedAlgebra& A, const Sequent& s, int atom_cap) {
  auto l = atoms_of(s.lhs), r = atoms_of(s.rhs);
  const int kc = std::max(l.c, r.c), ki = std::max(l.ia, r.ia);
  if (kc > atom_cap || ki > atom_cap) throw Error(ErrorKind::CapExceeded, "too many atoms for exhaustive validity");
  Valuation v;
  v.c.assign(static_cast<std::size_t>(kc), 0);
  v.ia.assign(static_cast<std::size_t>(ki), 0);
  const std::uint64_t nc = A.coalitions(), ne = A.elements();
  std::uint64_t total = 1;
  for (int i = 0; i < kc; ++i) total *= nc;
  for (int i = 0; i < ki; ++i) total *= ne;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (int i = 0; i < kc; ++i) v.c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % nc), x /= nc;
    for (int i = 0; i < ki; ++i) v.ia[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % ne), x /= ne;
    if (!holds(A, v, s)) return {false, v};
  }
  return {true, std::nullopt};
}

}  // namespace agenda
