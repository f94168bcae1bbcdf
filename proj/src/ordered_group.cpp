#include "mideal/ordered_group.hpp"

#include <stdexcept>

namespace mideal {

bool Atom::contains(const Rat& q) const {
  switch (kind) {
    case AtomKind::Z:
      return is_integer(q);
    case AtomKind::Q:
      return true;
    case AtomKind::ZLoc:
      return den(q) == 1 || is_power_of(den(q), p);
  }
  return false;
}

std::string Atom::str() const {
  switch (kind) {
    case AtomKind::Z:
      return "Z";
    case AtomKind::Q:
      return "Q";
    case AtomKind::ZLoc:
      return "Z[1/" + p.str() + "]";
  }
  return "?";
}

OrderedGroup OrderedGroup::Z() { return OrderedGroup{{Atom{AtomKind::Z, 0}}}; }
OrderedGroup OrderedGroup::Q() { return OrderedGroup{{Atom{AtomKind::Q, 0}}}; }

OrderedGroup OrderedGroup::ZLoc(Int p) {
  if (!is_prime_small(p)) throw std::invalid_argument("Z[1/p] requires prime p");
  return OrderedGroup{{Atom{AtomKind::ZLoc, p}}};
}

OrderedGroup OrderedGroup::lex(std::vector<OrderedGroup> factors) {
  if (factors.size() < 2) throw std::invalid_argument("lex product needs >= 2 factors");
  OrderedGroup g;
  for (auto& f : factors)
    for (auto& a : f.atoms) g.atoms.push_back(a);
  if (g.rank() > kMaxRank) throw std::invalid_argument("group rank exceeds cap");
  return g;
}

std::string OrderedGroup::str() const {
  if (atoms.empty()) return "0";
  if (atoms.size() == 1) return atoms[0].str();
  std::string s = "lex(";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) s += ",";
    s += atoms[i].str();
  }
  return s + ")";
}

int compare_lex(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

Point add_points(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point negate_point(const Point& a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool group_member(const OrderedGroup& G, const Point& x) {
  if (static_cast<int>(x.size()) != G.rank()) throw std::invalid_argument("rank mismatch");
  for (int i = 0; i < G.rank(); ++i)
    if (!G.atoms[i].contains(x[i])) return false;
  return true;
}

std::optional<Point> min_positive(const OrderedGroup& G) {
  if (!G.discrete_bottom()) return std::nullopt;
  Point p(G.rank(), Rat(0));
  p.back() = 1;
  return p;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += rat_str(p[i]);
  }
  return s + ")";
}

Cut canon_cut(const OrderedGroup& G, Point q, bool open) {
  int j = static_cast<int>(q.size());
  if (j < 1 || j > G.rank()) throw std::invalid_argument("bad cut prefix length");
  int bad = -1;  // first coordinate outside its atom
  for (int i = 0; i < j; ++i) {
    if (!G.atoms[i].contains(q[i])) {
      bad = i;
      break;
    }
  }
  if (!open && bad < 0) return Cut{std::move(q), false};  // attained
  // Strict upper set of the prefix point (a nonmember coordinate makes
  // >= and > coincide, so the closed case with bad >= 0 lands here too).
  if (bad >= 0) {
    q.resize(bad + 1);
    if (G.atoms[bad].discrete()) {
      q[bad] = Rat(floor_int(q[bad]) + 1);
      return Cut{std::move(q), false};
    }
    return Cut{std::move(q), false};  // dense: > q_bad has infimum q_bad, no member there
  }
  if (G.atoms[j - 1].discrete()) {
    q[j - 1] += 1;
    return Cut{std::move(q), false};
  }
  return Cut{std::move(q), true};
}

bool cut_canonical(const OrderedGroup& G, const Cut& c) {
  Cut d = canon_cut(G, c.point, c.open);
  return d == c;
}

bool cut_attained(const OrderedGroup& G, const Cut& c) {
  if (c.open) return false;
  for (int i = 0; i < c.prefix_len(); ++i)
    if (!G.atoms[i].contains(c.point[i])) return false;
  return true;
}

bool cut_member(const OrderedGroup& G, const Cut& c, const Point& g) {
  if (static_cast<int>(g.size()) != G.rank()) throw std::invalid_argument("rank mismatch");
  int j = c.prefix_len();
  for (int i = 0; i < j; ++i) {
    if (g[i] > c.point[i]) return true;
    if (g[i] < c.point[i]) return false;
  }
  return !c.open;
}

namespace {

// Extended boundary for comparing upper sets: the prefix point padded to
// full rank (-inf slots when the infimum is attained, +inf otherwise),
// plus whether the boundary itself belongs to the set.  Upper sets of a
// totally ordered group are totally ordered by inclusion, so this decides
// containment.
struct Boundary {
  Point point;                 // prefix coordinates
  int pad = 0;                 // number of padded slots
  bool pad_low = false;        // true: -inf padding; false: +inf padding
  bool include = false;        // boundary point itself in the set (full rank only)
};

Boundary boundary_of(const OrderedGroup& G, const Cut& c) {
  Boundary b;
  b.point = c.point;
  b.pad = G.rank() - c.prefix_len();
  bool att = cut_attained(G, c);
  b.pad_low = att;
  b.include = att && b.pad == 0;
  return b;
}

// -1 / 0 / 1 comparison of extended boundaries.
int boundary_cmp(const Boundary& a, const Boundary& b) {
  std::size_t na = a.point.size(), nb = b.point.size();
  std::size_t n = std::max(na + a.pad, nb + b.pad);
  for (std::size_t i = 0; i < n; ++i) {
    // slot value: finite, or +-inf
    int ia = i < na ? 0 : (a.pad_low ? -1 : 1);
    int ib = i < nb ? 0 : (b.pad_low ? -1 : 1);
    if (ia != 0 || ib != 0) {
      if (ia != ib) return ia < ib ? -1 : 1;
      continue;  // same infinity
    }
    if (a.point[i] < b.point[i]) return -1;
    if (a.point[i] > b.point[i]) return 1;
  }
  return 0;
}

}  // namespace

bool cut_subset(const OrderedGroup& G, const Cut& a, const Cut& b) {
  // set(a) subset set(b) iff boundary(b) <= boundary(a), with tie broken
  // by inclusion of the boundary point.
  Boundary ba = boundary_of(G, a), bb = boundary_of(G, b);
  int c = boundary_cmp(bb, ba);
  if (c != 0) return c < 0;
  return bb.include || !ba.include;
}

std::string cut_str(const Cut& c) {
  return std::string("cut") + point_str(c.point) + (c.open ? "+" : "");
}

std::vector<ConvexSubgroup> convex_subgroups(const OrderedGroup& G) {
  std::vector<ConvexSubgroup> r;
  for (int k = 0; k <= G.rank(); ++k) r.push_back(ConvexSubgroup{k});
  return r;
}

OrderedGroup subgroup_group(const OrderedGroup& G, ConvexSubgroup H) {
  if (H.k < 0 || H.k > G.rank()) throw std::invalid_argument("bad convex subgroup index");
  OrderedGroup g;
  g.atoms.assign(G.atoms.end() - H.k, G.atoms.end());
  return g;
}

OrderedGroup quotient_group(const OrderedGroup& G, ConvexSubgroup H) {
  if (H.k < 0 || H.k > G.rank()) throw std::invalid_argument("bad convex subgroup index");
  OrderedGroup g;
  g.atoms.assign(G.atoms.begin(), G.atoms.end() - H.k);
  return g;
}

}  // namespace mideal
