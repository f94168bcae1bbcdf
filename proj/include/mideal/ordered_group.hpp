#pragma once

#include "mideal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mideal {

// Rank-one building block of a value group.
enum class AtomKind { Z, Q, ZLoc };

struct Atom {
  AtomKind kind = AtomKind::Z;
  Int p = 0;  // prime, ZLoc only

  bool discrete() const { return kind == AtomKind::Z; }
  bool contains(const Rat& q) const;
  std::string str() const;
  bool operator==(const Atom& o) const { return kind == o.kind && p == o.p; }
};

// Totally ordered abelian group: a finite lex product of atoms, leftmost
// most significant.  Nested lex descriptors are flattened on construction.
// An empty atom list is the trivial group (used for degenerate quotients).
struct OrderedGroup {
  std::vector<Atom> atoms;

  static OrderedGroup trivial() { return OrderedGroup{}; }
  static OrderedGroup Z();
  static OrderedGroup Q();
  static OrderedGroup ZLoc(Int p);
  static OrderedGroup lex(std::vector<OrderedGroup> factors);

  int rank() const { return static_cast<int>(atoms.size()); }
  bool is_trivial() const { return atoms.empty(); }
  bool discrete_bottom() const { return !atoms.empty() && atoms.back().discrete(); }
  std::string str() const;
  bool operator==(const OrderedGroup& o) const { return atoms == o.atoms; }
};

inline constexpr int kMaxRank = 4;

// A point of the divisible hull Q^rank (full rank unless stated otherwise).
using Point = std::vector<Rat>;

int compare_lex(const Point& a, const Point& b);
Point add_points(const Point& a, const Point& b);
Point negate_point(const Point& a);
bool group_member(const OrderedGroup& G, const Point& x);
std::optional<Point> min_positive(const OrderedGroup& G);
std::string point_str(const Point& p);

// Upper set of G encoded by a prefix point: the set
//   { g in G : (g_1..g_j) >=lex point }   (or >lex when open),
// where j = point.size() <= rank.  j < rank gives a "band" (these arise
// from colon against localizations); j = rank is the generic case.
//
// Canonical form: coordinates 1..j-1 lie in their atoms; the last
// coordinate may fall outside its atom only if that atom is dense (the
// cut is then closed, and the two flags would describe the same set).
// Over a discrete last atom an open cut at a member point normalizes to
// the closed cut at the successor.
struct Cut {
  Point point;
  bool open = false;

  int prefix_len() const { return static_cast<int>(point.size()); }
  bool operator==(const Cut& o) const { return open == o.open && point == o.point; }
};

Cut canon_cut(const OrderedGroup& G, Point q, bool open);
bool cut_canonical(const OrderedGroup& G, const Cut& c);

// True iff the cut's infimum is itself in the set (for a full-rank cut:
// the point is a group element and the cut is closed).
bool cut_attained(const OrderedGroup& G, const Cut& c);

bool cut_member(const OrderedGroup& G, const Cut& c, const Point& g);

// set(a) subset-of set(b)
bool cut_subset(const OrderedGroup& G, const Cut& a, const Cut& b);

std::string cut_str(const Cut& c);

// Convex subgroup: the trailing k atoms.  k=0 is {0}, k=rank is G.
// These are exactly the convex subgroups of a finite lex product.
struct ConvexSubgroup {
  int k = 0;
  bool operator==(const ConvexSubgroup& o) const { return k == o.k; }
};

std::vector<ConvexSubgroup> convex_subgroups(const OrderedGroup& G);
OrderedGroup subgroup_group(const OrderedGroup& G, ConvexSubgroup H);
OrderedGroup quotient_group(const OrderedGroup& G, ConvexSubgroup H);

}  // namespace mideal
