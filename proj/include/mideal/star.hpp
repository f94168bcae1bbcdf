#pragma once

#include "mideal/quad_order.hpp"
#include "mideal/valuation.hpp"

#include <string>
#include <vector>

namespace mideal {

// Closure descriptors.  D = identity, V = divisorial, T = finite-type v,
// W = family-certified lower bound for the w-operation, Meet = meet over
// a family of overrings (semistar when the closure of the ring itself
// grows).
enum class StarKind { D, V, T, W, Meet };

struct StarOp {
  StarKind kind = StarKind::D;
  std::vector<ValPrime> val_overrings;
  std::vector<QuadraticOrder> ord_overrings;
  std::vector<ValIdeal> val_family;
  std::vector<LatticeIdeal> ord_family;
  bool finite_type = true;
  bool stable = true;

  std::string name() const;
};

StarOp star_d();
StarOp star_v();
StarOp star_t();
// Family members must be integral with H^v = D (and principal on the
// valuation backend, where finitely generated means principal); checked.
StarOp star_w(const ValuationDomain& V, std::vector<ValIdeal> family);
StarOp star_w(const QuadraticOrder& O, std::vector<LatticeIdeal> family);
StarOp star_meet(const ValuationDomain& V, std::vector<ValPrime> primes);
StarOp star_meet(const QuadraticOrder& O, std::vector<QuadraticOrder> overrings);

// The localization V_P viewed as a V-submodule of the field.
ValIdeal localization_as_module(const ValuationDomain& V, ValPrime P);

ValIdeal close(const StarOp& op, const ValuationDomain& V, const ValIdeal& I);
LatticeIdeal close(const StarOp& op, const QuadraticOrder& O, const LatticeIdeal& I);

// D^*: the unit ideal's closure (grows exactly for semistar operations).
ValIdeal star_of_unit(const StarOp& op, const ValuationDomain& V);
LatticeIdeal star_of_unit(const StarOp& op, const QuadraticOrder& O);

bool is_semistar_only(const StarOp& op, const ValuationDomain& V);
bool is_semistar_only(const StarOp& op, const QuadraticOrder& O);

StarOp finite_type_of(const StarOp& op, bool valuation_backend);

// (I (D^*:I))^* = D^*  /  (I (D:I))^* = D^*
bool is_quasi_star_invertible(const StarOp& op, const ValuationDomain& V, const ValIdeal& I);
bool is_star_invertible(const StarOp& op, const ValuationDomain& V, const ValIdeal& I);
bool is_quasi_star_invertible(const StarOp& op, const QuadraticOrder& O, const LatticeIdeal& I);
bool is_star_invertible(const StarOp& op, const QuadraticOrder& O, const LatticeIdeal& I);

struct CompareResult {
  bool leq = true, geq = true;
  std::string leq_witness, geq_witness;
};

CompareResult compare_ops(const StarOp& a, const StarOp& b, const ValuationDomain& V,
                          const std::vector<ValIdeal>& samples);
CompareResult compare_ops(const StarOp& a, const StarOp& b, const QuadraticOrder& O,
                          const std::vector<LatticeIdeal>& samples);

struct HDomainReport {
  bool holds = true;
  std::vector<std::string> notes;
  std::vector<std::string> witnesses;
};

// Every enumerated maximal t-ideal up to the bound is divisorial, and
// v-invertibility matches t-invertibility on the enumerated ideals.
HDomainReport h_domain_check(const QuadraticOrder& O, const Int& norm_bound);

}  // namespace mideal
