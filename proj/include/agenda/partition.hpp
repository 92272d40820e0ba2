#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace agenda {

using Block = std::vector<std::size_t>;
using Subset = std::vector<bool>;

// Equivalence relation on {0..n-1}. Stored as canonical block labels: blocks
// are numbered in order of their least element, so equal relations have
// equal label vectors.
class Partition {
 public:
  Partition() = default;

  static Partition from_blocks(std::size_t n, const std::vector<Block>& blocks);
  static Partition from_labels(const std::vector<std::uint32_t>& labels);
  static Partition top(std::size_t n);     // tau: one block
  static Partition bottom(std::size_t n);  // epsilon: all singletons

  std::size_t size() const { return label_.size(); }
  std::size_t block_count() const { return nblocks_; }
  std::uint32_t block_of(std::size_t w) const { return label_[w]; }
  const std::vector<std::uint32_t>& labels() const { return label_; }
  std::vector<Block> blocks() const;
  bool related(std::size_t w, std::size_t u) const { return label_[w] == label_[u]; }

  bool is_top() const { return nblocks_ == 1; }
  bool is_bottom() const { return nblocks_ == label_.size(); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.label_ == b.label_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.label_ < b.label_; }

 private:
  std::vector<std::uint32_t> label_;
  std::size_t nblocks_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

Partition make_partition(std::size_t n, const std::vector<Block>& blocks);
Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);
bool refines(const Partition& p, const Partition& q);

struct Irreducibles {
  std::vector<Partition> atoms;
  std::vector<Partition> coatoms;
};
Irreducibles enumerate_irreducibles(std::size_t n, std::size_t coatom_cap = 20);

enum class IrreducibleClass { Atom, Coatom, Neither, Bottom, Top };
IrreducibleClass classify_irreducible(const Partition& p);
const char* to_string(IrreducibleClass c);

Subset diamond_set(const Partition& e, const Subset& x);
Subset box_set(const Partition& e, const Subset& x);

class Preorder {
 public:
  Preorder() = default;
  explicit Preorder(std::size_t n) : n_(n), m_(n * n, 0) {}
  static Preorder from_predicate(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& le);
  static Preorder identity(std::size_t n);
  static Preorder total(std::size_t n);

  std::size_t size() const { return n_; }
  bool le(std::size_t a, std::size_t b) const { return m_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool v) { m_[a * n_ + b] = v ? 1 : 0; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> m_;
};

struct QuotientPreorder {
  Preorder order;
  std::optional<std::string> transitivity_warning;
};

QuotientPreorder preorder_from_equiv(const Partition& e, const Preorder& base);
Partition equiv_from_preorder(const Preorder& pre);

enum class Compatibility { None, Compatible, StronglyCompatible };
Compatibility compatibility(const Partition& e, const Preorder& pre);
// e o pre o e contained in pre
bool composition_contained(const Partition& e, const Preorder& pre);

enum class Preference { PrefersU, PrefersW, Tie, Incomparable };
Preference prefers(const Partition& e, const Preorder& base, std::size_t u, std::size_t w);
const char* to_string(Preference p);

}  // namespace agenda
