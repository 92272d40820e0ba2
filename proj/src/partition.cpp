#include "agenda/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "agenda/error.hpp"

namespace agenda {

namespace {

void same_ground(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::GroundMismatch, "ground sizes " + std::to_string(a) + " and " + std::to_string(b));
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
  Partition p;
  p.label_.resize(labels.size());
  // relabel by first occurrence, which orders blocks by least element
  std::uint32_t next = 0;
  std::vector<std::int64_t> map;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto l = labels[i];
    if (l >= map.size()) map.resize(l + 1, -1);
    if (map[l] < 0) map[l] = next++;
    p.label_[i] = static_cast<std::uint32_t>(map[l]);
  }
  p.nblocks_ = next;
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<Block>& blocks) {
  if (n == 0) throw Error(ErrorKind::TooSmall, "empty ground set");
  std::vector<std::int64_t> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::EmptyBlock, "block " + std::to_string(b) + " is empty");
    for (auto w : blocks[b]) {
      if (w >= n) throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(w));
      if (owner[w] >= 0) throw Error(ErrorKind::Overlap, "element " + std::to_string(w) + " in two blocks");
      owner[w] = static_cast<std::int64_t>(b);
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (std::size_t w = 0; w < n; ++w) {
    if (owner[w] < 0) throw Error(ErrorKind::Coverage, "element " + std::to_string(w) + " uncovered");
    labels[w] = static_cast<std::uint32_t>(owner[w]);
  }
  return from_labels(labels);
}

Partition Partition::top(std::size_t n) { return from_labels(std::vector<std::uint32_t>(n, 0)); }

Partition Partition::bottom(std::size_t n) {
  std::vector<std::uint32_t> l(n);
  std::iota(l.begin(), l.end(), 0u);
  return from_labels(l);
}

std::vector<Block> Partition::blocks() const {
  std::vector<Block> out(nblocks_);
  for (std::size_t w = 0; w < label_.size(); ++w) out[label_[w]].push_back(w);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) os << ",";
    first_block = false;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "}";
  }
  os << "}";
  return os.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = p.size();
  for (auto l : p.labels()) h = h * 1000003u ^ l;
  return h;
}

Partition make_partition(std::size_t n, const std::vector<Block>& blocks) { return Partition::from_blocks(n, blocks); }

Partition meet(const Partition& p, const Partition& q) {
  same_ground(p.size(), q.size());
  const std::size_t n = p.size();
  std::vector<std::uint32_t> l(n);
  const std::size_t width = q.block_count();
  for (std::size_t w = 0; w < n; ++w)
    l[w] = static_cast<std::uint32_t>(p.block_of(w) * width + q.block_of(w));
  // compress the product labels before relabelling
  std::vector<std::uint32_t> sorted(l);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& x : l) x = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  return Partition::from_labels(l);
}

Partition join(const Partition& p, const Partition& q) {
  same_ground(p.size(), q.size());
  const std::size_t n = p.size();
  UnionFind uf(n);
  std::vector<std::int64_t> first_p(p.block_count(), -1), first_q(q.block_count(), -1);
  for (std::size_t w = 0; w < n; ++w) {
    auto& fp = first_p[p.block_of(w)];
    if (fp < 0) fp = static_cast<std::int64_t>(w); else uf.unite(static_cast<std::size_t>(fp), w);
    auto& fq = first_q[q.block_of(w)];
    if (fq < 0) fq = static_cast<std::int64_t>(w); else uf.unite(static_cast<std::size_t>(fq), w);
  }
  std::vector<std::uint32_t> l(n);
  for (std::size_t w = 0; w < n; ++w) l[w] = static_cast<std::uint32_t>(uf.find(w));
  return Partition::from_labels(l);
}

bool refines(const Partition& p, const Partition& q) {
  same_ground(p.size(), q.size());
  std::vector<std::int64_t> target(p.block_count(), -1);
  for (std::size_t w = 0; w < p.size(); ++w) {
    auto& t = target[p.block_of(w)];
    if (t < 0) t = q.block_of(w);
    else if (t != static_cast<std::int64_t>(q.block_of(w))) return false;
  }
  return true;
}

Irreducibles enumerate_irreducibles(std::size_t n, std::size_t coatom_cap) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "need at least 2 elements");
  if (n > coatom_cap || n > 62)
    throw Error(ErrorKind::SizeCap, "coatom enumeration refused for n=" + std::to_string(n));
  Irreducibles out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::uint32_t> l(n);
      std::iota(l.begin(), l.end(), 0u);
      l[b] = static_cast<std::uint32_t>(a);
      out.atoms.push_back(Partition::from_labels(l));
    }
  // element 0 fixed in block 0; the other side must be nonempty
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    std::vector<std::uint32_t> l(n, 0);
    for (std::size_t i = 1; i < n; ++i) l[i] = (mask >> (i - 1)) & 1u;
    out.coatoms.push_back(Partition::from_labels(l));
  }
  return out;
}

IrreducibleClass classify_irreducible(const Partition& p) {
  if (p.is_bottom()) return IrreducibleClass::Bottom;
  if (p.is_top()) return IrreducibleClass::Top;
  if (p.block_count() == 2) return IrreducibleClass::Coatom;
  if (p.block_count() + 1 == p.size()) return IrreducibleClass::Atom;
  return IrreducibleClass::Neither;
}

const char* to_string(IrreducibleClass c) {
  switch (c) {
    case IrreducibleClass::Atom: return "Atom";
    case IrreducibleClass::Coatom: return "Coatom";
    case IrreducibleClass::Neither: return "Neither";
    case IrreducibleClass::Bottom: return "Bottom";
    case IrreducibleClass::Top: return "Top";
  }
  return "?";
}

Subset diamond_set(const Partition& e, const Subset& x) {
  same_ground(e.size(), x.size());
  std::vector<bool> hit(e.block_count(), false);
  for (std::size_t w = 0; w < x.size(); ++w)
    if (x[w]) hit[e.block_of(w)] = true;
  Subset out(x.size());
  for (std::size_t w = 0; w < x.size(); ++w) out[w] = hit[e.block_of(w)];
  return out;
}

Subset box_set(const Partition& e, const Subset& x) {
  same_ground(e.size(), x.size());
  std::vector<bool> inside(e.block_count(), true);
  for (std::size_t w = 0; w < x.size(); ++w)
    if (!x[w]) inside[e.block_of(w)] = false;
  Subset out(x.size());
  for (std::size_t w = 0; w < x.size(); ++w) out[w] = inside[e.block_of(w)];
  return out;
}

Preorder Preorder::from_predicate(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& le) {
  Preorder p(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.set(a, b, le(a, b));
  return p;
}

Preorder Preorder::identity(std::size_t n) {
  return from_predicate(n, [](std::size_t a, std::size_t b) { return a == b; });
}

Preorder Preorder::total(std::size_t n) {
  return from_predicate(n, [](std::size_t, std::size_t) { return true; });
}

bool Preorder::is_reflexive() const {
  for (std::size_t a = 0; a < n_; ++a)
    if (!le(a, a)) return false;
  return true;
}

bool Preorder::is_transitive() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (!le(a, b)) continue;
      for (std::size_t c = 0; c < n_; ++c)
        if (le(b, c) && !le(a, c)) return false;
    }
  return true;
}

bool Preorder::is_antisymmetric() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (le(a, b) && le(b, a)) return false;
  return true;
}

QuotientPreorder preorder_from_equiv(const Partition& e, const Preorder& base) {
  same_ground(e.size(), base.size());
  const std::size_t n = e.size(), k = e.block_count();
  // reach[w][B]: some u' in block B with w <= u'
  std::vector<std::uint8_t> reach(n * k, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      if (base.le(w, u)) reach[w * k + e.block_of(u)] = 1;
  std::vector<std::uint8_t> block_le(k * k, 1);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t b = 0; b < k; ++b)
      if (!reach[w * k + b]) block_le[e.block_of(w) * k + b] = 0;
  QuotientPreorder out;
  out.order = Preorder::from_predicate(n, [&](std::size_t w, std::size_t u) {
    return block_le[e.block_of(w) * k + e.block_of(u)] != 0;
  });
  bool trans = true;
  for (std::size_t a = 0; a < k && trans; ++a)
    for (std::size_t b = 0; b < k && trans; ++b)
      if (block_le[a * k + b])
        for (std::size_t c = 0; c < k; ++c)
          if (block_le[b * k + c] && !block_le[a * k + c]) {
            trans = false;
            break;
          }
  if (!trans) out.transitivity_warning = "quotient relation is not transitive";
  return out;
}

Partition equiv_from_preorder(const Preorder& pre) {
  const std::size_t n = pre.size();
  std::vector<std::uint32_t> l(n);
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t i = 0;
    for (; i < reps.size(); ++i)
      if (pre.le(w, reps[i]) && pre.le(reps[i], w)) break;
    if (i == reps.size()) reps.push_back(w);
    l[w] = static_cast<std::uint32_t>(i);
  }
  return Partition::from_labels(l);
}

bool composition_contained(const Partition& e, const Preorder& pre) {
  same_ground(e.size(), pre.size());
  const std::size_t n = e.size(), k = e.block_count();
  std::vector<std::uint8_t> linked(k * k, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      if (pre.le(w, u)) linked[e.block_of(w) * k + e.block_of(u)] = 1;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      if (linked[e.block_of(w) * k + e.block_of(u)] && !pre.le(w, u)) return false;
  return true;
}

Compatibility compatibility(const Partition& e, const Preorder& pre) {
  if (!composition_contained(e, pre)) return Compatibility::None;
  return refines(equiv_from_preorder(pre), e) ? Compatibility::StronglyCompatible : Compatibility::Compatible;
}

Preference prefers(const Partition& e, const Preorder& base, std::size_t u, std::size_t w) {
  same_ground(e.size(), base.size());
  if (u >= e.size() || w >= e.size()) throw Error(ErrorKind::IndexOutOfRange, "profile index");
  const std::size_t n = e.size();
  auto block_le = [&](std::size_t x, std::size_t y) {
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (!e.related(x, x2)) continue;
      bool found = false;
      for (std::size_t y2 = 0; y2 < n && !found; ++y2) found = e.related(y, y2) && base.le(x2, y2);
      if (!found) return false;
    }
    return true;
  };
  bool wu = block_le(w, u), uw = block_le(u, w);
  if (wu && uw) return Preference::Tie;
  if (wu) return Preference::PrefersU;
  if (uw) return Preference::PrefersW;
  return Preference::Incomparable;
}

const char* to_string(Preference p) {
  switch (p) {
    case Preference::PrefersU: return "PrefersU";
    case Preference::PrefersW: return "PrefersW";
    case Preference::Tie: return "Tie";
    case Preference::Incomparable: return "Incomparable";
  }
  return "?";
}

}  // namespace agenda
