#pragma once

#include "mideal/ordered_group.hpp"

#include <optional>
#include <string>

namespace mideal {

// Valuation domain V presented by its value group.  Ideals are value
// sets: nonzero fractional ideals correspond exactly to proper nonempty
// upper sets of the group, i.e. cuts.  The zero ideal and the whole
// quotient field are unrepresentable by construction.
struct ValuationDomain {
  OrderedGroup group;

  explicit ValuationDomain(OrderedGroup g);
  int rank() const { return group.rank(); }
  bool operator==(const ValuationDomain& o) const { return group == o.group; }
};

struct ValIdeal {
  OrderedGroup group;
  Cut cut;

  bool operator==(const ValIdeal& o) const { return group == o.group && cut == o.cut; }
  std::string str() const { return cut_str(cut); }
};

// Prime P_H = {x : w(x) > h for all h in H}, H a convex subgroup.
// H = {0} (k=0) gives the maximal ideal M; H = G (k=rank) the zero prime.
struct ValPrime {
  ConvexSubgroup subgroup;
};

ValIdeal make_ideal(const ValuationDomain& V, Point p, bool open);
ValIdeal unit_ideal(const ValuationDomain& V);       // V itself, cut(0, closed)
ValIdeal maximal_ideal(const ValuationDomain& V);    // M, canon of cut(0, open)
ValIdeal prime_as_ideal(const ValuationDomain& V, ValPrime P);  // P_H, H != G

ValIdeal multiply(const ValuationDomain& V, const ValIdeal& I, const ValIdeal& J);
// (I : J) = {z : zJ subset I}
ValIdeal colon(const ValuationDomain& V, const ValIdeal& I, const ValIdeal& J);
ValIdeal v_closure(const ValuationDomain& V, const ValIdeal& I);

bool is_principal(const ValuationDomain& V, const ValIdeal& I);
bool is_divisorial(const ValuationDomain& V, const ValIdeal& I);
bool is_invertible(const ValuationDomain& V, const ValIdeal& I);
bool is_v_invertible(const ValuationDomain& V, const ValIdeal& I);

// phi(I): the cut point, rank one only.
Rat phi(const ValuationDomain& V, const ValIdeal& I);

ValuationDomain quotient_by_prime(const ValuationDomain& V, ValPrime P);
ValIdeal push_ideal(const ValuationDomain& V, const ValIdeal& I, ValPrime P);
ValuationDomain localize_at_prime(const ValuationDomain& V, ValPrime P);

struct MaximalIdealProfile {
  bool principal = false;
  bool idempotent = false;
  bool branched = true;
  ValPrime prime_directly_below;  // k=1; for rank one this is the zero prime
};

MaximalIdealProfile maximal_ideal_profile(const ValuationDomain& V);

}  // namespace mideal
