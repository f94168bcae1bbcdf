#include "mideal/star.hpp"

#include <stdexcept>

namespace mideal {

std::string StarOp::name() const {
  switch (kind) {
    case StarKind::D:
      return "d";
    case StarKind::V:
      return "v";
    case StarKind::T:
      return "t";
    case StarKind::W:
      return "w";
    case StarKind::Meet:
      return "meet";
  }
  return "?";
}

StarOp star_d() { return StarOp{StarKind::D, {}, {}, {}, {}, true, true}; }

StarOp star_v() { return StarOp{StarKind::V, {}, {}, {}, {}, false, false}; }

StarOp star_t() { return StarOp{StarKind::T, {}, {}, {}, {}, true, false}; }

StarOp star_w(const ValuationDomain& V, std::vector<ValIdeal> family) {
  StarOp op{StarKind::W, {}, {}, {}, {}, true, true};
  if (family.empty()) throw std::invalid_argument("w needs a nonempty test family");
  ValIdeal one = unit_ideal(V);
  for (auto& H : family) {
    if (!cut_subset(V.group, H.cut, one.cut) || !is_principal(V, H))
      throw std::invalid_argument("w family member must be finitely generated and integral");
    if (!(v_closure(V, H) == one))
      throw std::invalid_argument("w family member must have H^v = D");
  }
  op.val_family = std::move(family);
  return op;
}

StarOp star_w(const QuadraticOrder& O, std::vector<LatticeIdeal> family) {
  StarOp op{StarKind::W, {}, {}, {}, {}, true, true};
  if (family.empty()) throw std::invalid_argument("w needs a nonempty test family");
  LatticeIdeal one = unit_ideal(O);
  for (auto& H : family) {
    if (!lattice_subset(H, one)) throw std::invalid_argument("w family member must be integral");
    if (!(v_closure(H) == one)) throw std::invalid_argument("w family member must have H^v = D");
  }
  op.ord_family = std::move(family);
  return op;
}

StarOp star_meet(const ValuationDomain& V, std::vector<ValPrime> primes) {
  if (primes.empty()) throw std::invalid_argument("meet needs a nonempty overring family");
  for (auto& P : primes)
    if (P.subgroup.k < 0 || P.subgroup.k >= V.rank())
      throw std::invalid_argument("meet overring must be a localization at a nonzero prime");
  // localizations of a valuation domain are flat quotient rings
  return StarOp{StarKind::Meet, std::move(primes), {}, {}, {}, true, true};
}

StarOp star_meet(const QuadraticOrder& O, std::vector<QuadraticOrder> overrings) {
  if (overrings.empty()) throw std::invalid_argument("meet needs a nonempty overring family");
  bool all_self = true;
  for (auto& T : overrings) {
    if (T.fund_disc != O.fund_disc || O.conductor % T.conductor != 0)
      throw std::invalid_argument("meet overring must contain the order");
    if (!(T == O)) all_self = false;
  }
  // a strictly larger order is not flat over O
  return StarOp{StarKind::Meet, {}, std::move(overrings), {}, {}, true, all_self};
}

ValIdeal localization_as_module(const ValuationDomain& V, ValPrime P) {
  int k = P.subgroup.k;
  if (k < 0 || k >= V.rank()) throw std::invalid_argument("bad localization prime");
  if (k == 0) return unit_ideal(V);
  return ValIdeal{V.group, canon_cut(V.group, Point(V.rank() - k, Rat(0)), false)};
}

namespace {

ValIdeal product_of_family(const ValuationDomain& V, const std::vector<ValIdeal>& fam) {
  ValIdeal r = fam.front();
  for (std::size_t i = 1; i < fam.size(); ++i) r = multiply(V, r, fam[i]);
  return r;
}

LatticeIdeal product_of_family(const std::vector<LatticeIdeal>& fam) {
  LatticeIdeal r = fam.front();
  for (std::size_t i = 1; i < fam.size(); ++i) r = multiply(r, fam[i]);
  return r;
}

}  // namespace

ValIdeal close(const StarOp& op, const ValuationDomain& V, const ValIdeal& I) {
  switch (op.kind) {
    case StarKind::D:
    case StarKind::T:  // t = (v)_f = d on a valuation domain
      return I;
    case StarKind::V:
      return v_closure(V, I);
    case StarKind::W:
      return colon(V, I, product_of_family(V, op.val_family));
    case StarKind::Meet: {
      bool have = false;
      ValIdeal best = I;
      for (auto& P : op.val_overrings) {
        ValIdeal ext = multiply(V, I, localization_as_module(V, P));
        if (!have || cut_subset(V.group, ext.cut, best.cut)) {
          best = ext;
          have = true;
        }
      }
      return best;  // upper sets are totally ordered, the meet is the smallest
    }
  }
  throw std::logic_error("unreachable");
}

LatticeIdeal close(const StarOp& op, const QuadraticOrder& O, const LatticeIdeal& I) {
  switch (op.kind) {
    case StarKind::D:
      return I;
    case StarKind::V:
    case StarKind::T:  // Noetherian: every ideal is finitely generated, t = v
      return v_closure(I);
    case StarKind::W:
      return colon(I, product_of_family(op.ord_family));
    case StarKind::Meet: {
      bool have = false;
      LatticeIdeal acc = I;
      for (auto& T : op.ord_overrings) {
        LatticeIdeal ext = restrict_to_order(extend_to_order(I, T), O);
        acc = have ? intersect(acc, ext) : ext;
        have = true;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

ValIdeal star_of_unit(const StarOp& op, const ValuationDomain& V) {
  return close(op, V, unit_ideal(V));
}

LatticeIdeal star_of_unit(const StarOp& op, const QuadraticOrder& O) {
  return close(op, O, unit_ideal(O));
}

bool is_semistar_only(const StarOp& op, const ValuationDomain& V) {
  return !(star_of_unit(op, V) == unit_ideal(V));
}

bool is_semistar_only(const StarOp& op, const QuadraticOrder& O) {
  return !(star_of_unit(op, O) == unit_ideal(O));
}

StarOp finite_type_of(const StarOp& op, bool valuation_backend) {
  if (op.kind == StarKind::V) return valuation_backend ? star_d() : star_t();
  return op;  // d, t, w, finite meets are already of finite type
}

bool is_quasi_star_invertible(const StarOp& op, const ValuationDomain& V, const ValIdeal& I) {
  ValIdeal Ds = star_of_unit(op, V);
  return close(op, V, multiply(V, I, colon(V, Ds, I))) == Ds;
}

bool is_star_invertible(const StarOp& op, const ValuationDomain& V, const ValIdeal& I) {
  ValIdeal Ds = star_of_unit(op, V);
  return close(op, V, multiply(V, I, colon(V, unit_ideal(V), I))) == Ds;
}

bool is_quasi_star_invertible(const StarOp& op, const QuadraticOrder& O, const LatticeIdeal& I) {
  LatticeIdeal Ds = star_of_unit(op, O);
  return close(op, O, multiply(I, colon(Ds, I))) == Ds;
}

bool is_star_invertible(const StarOp& op, const QuadraticOrder& O, const LatticeIdeal& I) {
  LatticeIdeal Ds = star_of_unit(op, O);
  return close(op, O, multiply(I, colon(unit_ideal(O), I))) == Ds;
}

CompareResult compare_ops(const StarOp& a, const StarOp& b, const ValuationDomain& V,
                          const std::vector<ValIdeal>& samples) {
  CompareResult r;
  for (auto& I : samples) {
    ValIdeal ca = close(a, V, I), cb = close(b, V, I);
    if (r.leq && !cut_subset(V.group, ca.cut, cb.cut)) {
      r.leq = false;
      r.leq_witness = I.str();
    }
    if (r.geq && !cut_subset(V.group, cb.cut, ca.cut)) {
      r.geq = false;
      r.geq_witness = I.str();
    }
  }
  return r;
}

CompareResult compare_ops(const StarOp& a, const StarOp& b, const QuadraticOrder& O,
                          const std::vector<LatticeIdeal>& samples) {
  CompareResult r;
  for (auto& I : samples) {
    LatticeIdeal ca = close(a, O, I), cb = close(b, O, I);
    if (r.leq && !lattice_subset(ca, cb)) {
      r.leq = false;
      r.leq_witness = I.str();
    }
    if (r.geq && !lattice_subset(cb, ca)) {
      r.geq = false;
      r.geq_witness = I.str();
    }
  }
  return r;
}

HDomainReport h_domain_check(const QuadraticOrder& O, const Int& norm_bound) {
  HDomainReport rep;
  LatticeIdeal one = unit_ideal(O);
  for (auto& M : maximal_ideals_up_to(O, norm_bound)) {
    LatticeIdeal Mv = v_closure(M);
    if (Mv == M) {
      rep.notes.push_back(M.str() + " is a divisorial t-maximal ideal");
    } else if (Mv == one) {
      rep.notes.push_back(M.str() + " has M^v = D (not a t-ideal)");
    } else {
      rep.holds = false;
      rep.witnesses.push_back(M.str() + " has M^v strictly between M and D");
    }
  }
  for (auto& I : integral_ideals_up_to(O, norm_bound)) {
    bool vi = is_v_invertible(I);
    bool ti = is_star_invertible(star_t(), O, I);
    if (vi != ti) {
      rep.holds = false;
      rep.witnesses.push_back(I.str() + ": v-invertible and t-invertible disagree");
    }
  }
  return rep;
}

}  // namespace mideal
