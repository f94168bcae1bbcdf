#include "mideal/valuation.hpp"

#include <stdexcept>

namespace mideal {

ValuationDomain::ValuationDomain(OrderedGroup g) : group(std::move(g)) {
  if (group.rank() < 1) throw std::invalid_argument("valuation domain needs rank >= 1");
}

ValIdeal make_ideal(const ValuationDomain& V, Point p, bool open) {
  return ValIdeal{V.group, canon_cut(V.group, std::move(p), open)};
}

ValIdeal unit_ideal(const ValuationDomain& V) {
  return make_ideal(V, Point(V.rank(), Rat(0)), false);
}

ValIdeal maximal_ideal(const ValuationDomain& V) {
  return make_ideal(V, Point(V.rank(), Rat(0)), true);
}

ValIdeal prime_as_ideal(const ValuationDomain& V, ValPrime P) {
  int k = P.subgroup.k;
  if (k < 0 || k >= V.rank()) throw std::invalid_argument("prime index out of range");
  // P_H is the strict upper set of 0 in the leading rank-k coordinates.
  return ValIdeal{V.group, canon_cut(V.group, Point(V.rank() - k, Rat(0)), true)};
}

namespace {

void check_domain(const ValuationDomain& V, const ValIdeal& I) {
  if (!(I.group == V.group)) throw std::invalid_argument("ideal from a different domain");
}

struct EffCut {
  Point point;     // truncated to the common prefix
  bool attained;   // infimum of the truncated description achieved by set elements
};

EffCut truncate_to(const OrderedGroup& G, const Cut& c, int m, bool truncation_attains) {
  EffCut e;
  e.point.assign(c.point.begin(), c.point.begin() + m);
  if (c.prefix_len() > m)
    e.attained = truncation_attains;
  else
    e.attained = cut_attained(G, c);
  return e;
}

}  // namespace

// Value-set product: sums of members.  Working on the common prefix, an
// operand with a longer prefix attains its truncated infimum (deeper
// coordinates absorb any slack); the sum is attained iff both operands
// attain theirs.
ValIdeal multiply(const ValuationDomain& V, const ValIdeal& I, const ValIdeal& J) {
  check_domain(V, I);
  check_domain(V, J);
  int m = std::min(I.cut.prefix_len(), J.cut.prefix_len());
  EffCut a = truncate_to(V.group, I.cut, m, true);
  EffCut b = truncate_to(V.group, J.cut, m, true);
  Point r = add_points(a.point, b.point);
  return ValIdeal{V.group, canon_cut(V.group, std::move(r), !(a.attained && b.attained))};
}

// (I : J) = {g : g + set(J) subset set(I)}.  On the common prefix the
// difference of the boundary points works, strict exactly when J attains
// its boundary while I does not (that element must still land inside I).
// A longer J-prefix attains on truncation; a longer I-prefix does not
// (its set omits the truncated boundary fiber's low tail).
ValIdeal colon(const ValuationDomain& V, const ValIdeal& I, const ValIdeal& J) {
  check_domain(V, I);
  check_domain(V, J);
  int m = std::min(I.cut.prefix_len(), J.cut.prefix_len());
  EffCut a = truncate_to(V.group, I.cut, m, false);
  EffCut b = truncate_to(V.group, J.cut, m, true);
  Point r = add_points(a.point, negate_point(b.point));
  bool strict = b.attained && !a.attained;
  return ValIdeal{V.group, canon_cut(V.group, std::move(r), strict)};
}

// I^v: the intersection of principal ideals containing I.  The only
// non-divisorial cuts are full-rank open ones (their principal
// neighborhoods close the boundary); bands and attained cuts are already
// intersections of principals.
ValIdeal v_closure(const ValuationDomain& V, const ValIdeal& I) {
  check_domain(V, I);
  if (I.cut.open && I.cut.prefix_len() == V.rank())
    return ValIdeal{V.group, Cut{I.cut.point, false}};
  return I;
}

bool is_principal(const ValuationDomain& V, const ValIdeal& I) {
  check_domain(V, I);
  return I.cut.prefix_len() == V.rank() && cut_attained(V.group, I.cut);
}

bool is_divisorial(const ValuationDomain& V, const ValIdeal& I) {
  check_domain(V, I);
  return !(I.cut.open && I.cut.prefix_len() == V.rank());
}

bool is_invertible(const ValuationDomain& V, const ValIdeal& I) {
  return multiply(V, I, colon(V, unit_ideal(V), I)) == unit_ideal(V);
}

bool is_v_invertible(const ValuationDomain& V, const ValIdeal& I) {
  return v_closure(V, multiply(V, I, colon(V, unit_ideal(V), I))) == unit_ideal(V);
}

Rat phi(const ValuationDomain& V, const ValIdeal& I) {
  check_domain(V, I);
  if (V.rank() != 1) throw std::invalid_argument("phi requires a rank-one domain");
  return I.cut.point[0];
}

ValuationDomain quotient_by_prime(const ValuationDomain& V, ValPrime P) {
  int k = P.subgroup.k;
  if (k < 1 || k > V.rank()) throw std::invalid_argument("quotient requires a nonmaximal prime");
  if (k == V.rank()) return V;  // zero prime: V/0 = V
  return ValuationDomain(subgroup_group(V.group, P.subgroup));
}

ValIdeal push_ideal(const ValuationDomain& V, const ValIdeal& I, ValPrime P) {
  check_domain(V, I);
  int k = P.subgroup.k;
  if (k < 1 || k > V.rank()) throw std::invalid_argument("push requires a nonmaximal prime");
  if (k == V.rank()) return I;
  int lead = V.rank() - k;
  if (I.cut.prefix_len() <= lead)
    throw std::invalid_argument("ideal does not properly contain the prime");
  for (int i = 0; i < lead; ++i)
    if (I.cut.point[i] != 0)
      throw std::invalid_argument("ideal does not properly contain the prime");
  ValuationDomain W = quotient_by_prime(V, P);
  Point q(I.cut.point.begin() + lead, I.cut.point.end());
  return make_ideal(W, std::move(q), I.cut.open);
}

ValuationDomain localize_at_prime(const ValuationDomain& V, ValPrime P) {
  int k = P.subgroup.k;
  if (k < 0 || k >= V.rank()) throw std::invalid_argument("localization requires a nonzero prime");
  if (k == 0) return V;  // at M
  return ValuationDomain(quotient_group(V.group, P.subgroup));
}

MaximalIdealProfile maximal_ideal_profile(const ValuationDomain& V) {
  MaximalIdealProfile r;
  r.principal = min_positive(V.group).has_value();
  r.idempotent = !r.principal;
  r.branched = true;  // finite lex products always have a prime directly below M
  r.prime_directly_below = ValPrime{ConvexSubgroup{1}};
  return r;
}

}  // namespace mideal
