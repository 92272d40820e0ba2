#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agenda/coalition.hpp"
#include "agenda/hetero.hpp"

namespace agenda {

// A finite two-sorted algebra (C, D, operators) with every operator tabulated.
// C-elements are coalition bitmasks; D-elements are indices 0..N-1.
class TwoSortedAlgebra {
 public:
  struct Spec {
    std::size_t agents = 0;
    InfluenceRelation I;
    std::size_t elements = 0;
    std::vector<std::uint8_t> le;         // N*N refinement order
    std::vector<std::uint32_t> meet;      // N*N
    std::uint32_t top = 0;
    std::vector<std::uint32_t> generators;            // element index of each issue
    std::vector<std::vector<std::uint32_t>> relevant;  // per agent, issue positions
    std::vector<std::vector<std::vector<std::uint32_t>>> subst;  // [agent][issue] -> issue positions
    std::vector<std::string> labels;
    std::vector<std::string> agent_names;
  };

  explicit TwoSortedAlgebra(Spec spec);

  std::size_t agents() const { return n_agents_; }
  std::size_t coalitions() const { return n_coal_; }
  std::size_t elements() const { return n_; }
  std::uint32_t full() const { return static_cast<std::uint32_t>(n_coal_ - 1); }

  bool le(std::uint32_t a, std::uint32_t b) const { return le_[a * n_ + b] != 0; }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const { return meet_[a * n_ + b]; }
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const { return join_[a * n_ + b]; }
  std::uint32_t tau() const { return top_; }
  std::uint32_t bot() const { return bot_; }

  std::uint32_t dia(std::uint32_t c) const { return dia_[c]; }
  std::uint32_t rhd(std::uint32_t c) const { return rhd_[c]; }
  std::uint32_t pdra(std::uint32_t c, std::uint32_t e) const { return pdra_[c * n_ + e]; }
  std::uint32_t eqless(std::uint32_t c, std::uint32_t e) const { return eqless_[c * n_ + e]; }
  std::uint32_t br(std::uint32_t c, std::uint32_t e) const { return br_[c * n_ + e]; }
  std::uint32_t tri(std::uint32_t c, std::uint32_t e) const { return tri_[c * n_ + e]; }
  std::uint32_t star(std::uint32_t a, std::uint32_t b) const { return star_[a * n_ + b]; }
  std::uint32_t brB(std::uint32_t a, std::uint32_t b) const { return brB_[a * n_ + b]; }
  std::uint32_t bsq(std::uint32_t e) const { return bsq_[e]; }
  std::uint32_t bltri(std::uint32_t e) const { return bltri_[e]; }
  std::uint32_t diamdot(std::uint32_t c) const { return dd_[c]; }
  std::uint32_t diamdotb(std::uint32_t c) const { return ddb_[c]; }
  std::uint32_t boxdot(std::uint32_t c) const { return full() & ~dd_[full() & ~c]; }
  std::uint32_t blacksqdot(std::uint32_t c) const { return full() & ~ddb_[full() & ~c]; }

  const std::string& label(std::uint32_t e) const { return labels_[e]; }
  std::string coalition_label(std::uint32_t c) const;

 private:
  std::size_t n_agents_, n_coal_, n_;
  std::vector<std::uint8_t> le_;
  std::vector<std::uint32_t> meet_, join_;
  std::uint32_t top_, bot_;
  std::vector<std::uint32_t> dia_, rhd_, pdra_, eqless_, br_, tri_, star_, brB_, bsq_, bltri_, dd_, ddb_;
  std::vector<std::string> labels_, agent_names_;
};

TwoSortedAlgebra algebra_of(const HeteroStructure& H, std::size_t coalition_cap = 12);

enum class Sort { C, IA };

enum class Op {
  AtomC, TopC, BotC, And, Or, Not, DiamDot, DiamDotB, BoxDot, BlackSqDot, BlackSquare, BlackTri, Star, BrB,
  AtomIA, Tau, BotIA, Meet, Join, Diamond, Rhd, Pdra, EqLess, Br, Triangle,
};

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  Op op;
  Sort sort;
  int atom = -1;
  Term a, b;
};

Sort sort_of(Op op);
std::string to_string(const Term& t);

namespace term {
Term atom_c(int i);
Term atom_ia(int i);
Term make(Op op, Term a = nullptr, Term b = nullptr);
inline Term top_c() { return make(Op::TopC); }
inline Term bot_c() { return make(Op::BotC); }
inline Term tau() { return make(Op::Tau); }
inline Term bot_ia() { return make(Op::BotIA); }
}  // namespace term

struct Sequent {
  Term lhs, rhs;
};
Sequent make_sequent(Term lhs, Term rhs);
std::string to_string(const Sequent& s);

struct Valuation {
  std::vector<std::uint32_t> c;   // coalition per C-atom
  std::vector<std::uint32_t> ia;  // element index per IA-atom
};

std::uint32_t eval_term(const TwoSortedAlgebra& A, const Valuation& v, const Term& t);
bool holds(const TwoSortedAlgebra& A, const Valuation& v, const Sequent& s);

struct AtomCount {
  int c = 0, ia = 0;
};
AtomCount atoms_of(const Term& t);

struct ValidityResult {
  bool valid = true;
  std::optional<Valuation> counterexample;
};

ValidityResult check_validity(const TwoSortedAlgebra& A, const Sequent& s, int atom_cap = 2);

}  // namespace agenda
