#include "doctest.h"

#include <random>

#include "agenda/logic.hpp"
#include "support.hpp"

using namespace agenda;
using support::gen;
using support::kind_of;
using support::model;

namespace {

std::uint32_t element(const HeteroStructure& H, const Partition& p) { return static_cast<std::uint32_t>(*H.lattice.index_of(p)); }

}  // namespace

TEST_CASE("tables agree with the hetero operators") {
  std::vector<HeteroStructure> hs;
  for (auto f : {"hiring.json", "hiring_s2.json", "car.json"}) hs.push_back(model(f).H);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) hs.push_back(support::random_structure(rng, t % 3 != 0));
  for (const auto& H : hs) {
    auto A = algebra_of(H);
    const auto& D = H.lattice.elements();
    REQUIRE(A.elements() == D.size());
    REQUIRE(A.coalitions() == (std::size_t{1} << H.agent_count()));
    CHECK(D[A.tau()].is_top());
    CHECK(D[A.bot()] == H.lattice.bottom());
    for (std::uint32_t c = 0; c < A.coalitions(); ++c) {
      Coalition co{c};
      CHECK(D[A.dia(c)] == common_agenda(H, co));
      CHECK(D[A.rhd(c)] == distributed_agenda(H, co));
      CHECK(A.diamdot(c) == influencers(H.I, co).bits);
      CHECK(A.diamdotb(c) == audience(H.I, co).bits);
      for (std::uint32_t e = 0; e < D.size(); ++e) {
        CHECK(D[A.pdra(c, e)] == subst_transform(H, co, D[e]));
        CHECK(D[A.br(c, e)] == br_transform(H, co, D[e]));
        CHECK(D[A.eqless(c, e)] == residual_second(H, co, D[e]));
        CHECK(D[A.tri(c, e)] == vartriangle(H, co, D[e]));
      }
    }
    for (std::uint32_t e = 0; e < D.size(); ++e) {
      CHECK(A.bsq(e) == blacksquare(H, D[e]).bits);
      CHECK(A.bltri(e) == blacktriangleright(H, D[e]).bits);
      for (std::uint32_t f = 0; f < D.size(); ++f) {
        CHECK(A.le(e, f) == refines(D[e], D[f]));
        CHECK(D[A.meet(e, f)] == meet(D[e], D[f]));
        CHECK(D[A.join(e, f)] == d_join(H.lattice, {D[e], D[f]}));
        CHECK(A.star(e, f) == star(H, D[e], D[f]).bits);
        CHECK(A.brB(e, f) == brB(H, D[e], D[f]).bits);
      }
    }
  }
}

TEST_CASE("term evaluation on the hiring structure") {
  auto m = model("hiring.json");
  auto A = algebra_of(m.H);
  using namespace term;
  Valuation v;
  v.c = {1, 2};  // c1 = {a}, c2 = {b}
  auto r = element(m.H, gen(m.H, "param:r"));
  CHECK(eval_term(A, v, make(Op::Diamond, make(Op::Or, atom_c(0), atom_c(1)))) == r);
  CHECK(eval_term(A, v, bot_ia()) == A.bot());
  auto agg = make(Op::Meet, make(Op::Pdra, atom_c(0), make(Op::Diamond, atom_c(1))),
                  make(Op::Pdra, atom_c(1), make(Op::Diamond, atom_c(0))));
  CHECK(eval_term(A, v, agg) == r);
  CHECK(to_string(agg) == "((c1 −< ⋄c2) ⊓ (c2 −< ⋄c1))");

  auto s2 = model("hiring_s2.json");
  auto A2 = algebra_of(s2.H);
  auto pl = element(s2.H, meet(gen(s2.H, "param:p"), gen(s2.H, "param:l")));
  CHECK(eval_term(A2, v, agg) == pl);

  CHECK(kind_of([&] { eval_term(A, Valuation{}, atom_c(0)); }) == ErrorKind::UnassignedAtom);
  CHECK(kind_of([&] { make(Op::Meet, atom_c(0), tau()); }) == ErrorKind::SortError);
  CHECK(kind_of([&] { make_sequent(tau(), top_c()); }) == ErrorKind::SortError);
  CHECK(kind_of([&] { make(Op::Diamond); }) == ErrorKind::SortError);
  CHECK(sort_of(Op::BlackTri) == Sort::C);
  auto ac = atoms_of(agg);
  CHECK(ac.c == 2);
  CHECK(ac.ia == 0);
}

TEST_CASE("validity") {
  auto m = model("hiring.json");
  auto A = algebra_of(m.H);
  using namespace term;
  CHECK(check_validity(A, make_sequent(tau(), tau())).valid);
  CHECK(check_validity(A, make_sequent(bot_ia(), atom_ia(0))).valid);
  auto bad = check_validity(A, make_sequent(atom_ia(0), bot_ia()));
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.counterexample);
  CHECK_FALSE(holds(A, *bad.counterexample, make_sequent(atom_ia(0), bot_ia())));
  // diamond and blacksquare are adjoint, so both unit laws are valid
  CHECK(check_validity(A, make_sequent(make(Op::Diamond, make(Op::BlackSquare, atom_ia(0))), atom_ia(0))).valid);
  CHECK(check_validity(A, make_sequent(atom_c(0), make(Op::BlackSquare, make(Op::Diamond, atom_c(0))))).valid);
  CHECK(check_validity(A, make_sequent(make(Op::Or, atom_c(0), make(Op::Not, atom_c(0))), top_c())).valid);
  auto three = make(Op::Meet, make(Op::Meet, atom_ia(0), atom_ia(1)), atom_ia(2));
  CHECK(kind_of([&] { check_validity(A, make_sequent(three, tau())); }) == ErrorKind::CapExceeded);
  CHECK(check_validity(A, make_sequent(three, tau()), 3).valid);
}
