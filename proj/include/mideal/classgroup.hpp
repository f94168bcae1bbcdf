#pragma once

#include "mideal/star.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mideal {

enum class ClassGroupKind { Trivial, RModG };

struct ClassGroupDescriptor {
  ClassGroupKind kind = ClassGroupKind::Trivial;
  OrderedGroup modulus;  // RModG: the bottom rank-one group G (R/G presented by G)
  std::string reason;
};

ClassGroupDescriptor cl_v_descriptor(const ValuationDomain& V);

// Class of a v-invertible divisorial ideal: the bottom coordinate of the
// cut point modulo the bottom rank-one group, after stripping the
// (principal) leading coordinates.  Only the Q-rational part of R/G is
// representable; that is all the cut calculus can produce.
struct IdealClass {
  Atom modulus;
  Rat rep;
};

Rat class_reduce(const Atom& A, const Rat& r);
IdealClass class_of(const ValuationDomain& V, const ValIdeal& I);
IdealClass class_mul(const IdealClass& a, const IdealClass& b);
bool class_eq(const IdealClass& a, const IdealClass& b);
bool class_trivial(const IdealClass& a);
std::optional<Int> class_order(const IdealClass& a, const Int& bound = Int(10000));

struct TransportReport {
  bool ok = true;
  int checked = 0;
  std::string witness;
};

// Cl^v(V) vs Cl^v(V/P) along push_ideal: well-defined, class-preserving,
// injective on distinct classes, multiplicative on the sample.
TransportReport cl_transport_check(const ValuationDomain& V, ValPrime P,
                                   const std::vector<ValIdeal>& samples);

struct OrderClassSurvey {
  int pic_classes = 0;
  int v_classes = 0;
  int t_classes = 0;
  bool clT_equals_clV = true;
  bool every_t_invertible_invertible = true;
  std::vector<std::string> pic_reps, v_reps;
  std::string witness;
};

OrderClassSurvey order_class_survey(const QuadraticOrder& O, const Int& norm_bound);

struct GcdReport {
  bool applicable = true;          // every sampled f.g. ideal v-invertible
  bool all_classes_trivial = true;
  bool holds = true;               // trivial classes force principal v-closures
  bool representability_caveat = false;
  std::string witness;
};

GcdReport gcd_criterion_check(const ValuationDomain& V, const std::vector<ValIdeal>& samples);
GcdReport gcd_criterion_check(const QuadraticOrder& O, const std::vector<LatticeIdeal>& samples);

}  // namespace mideal
