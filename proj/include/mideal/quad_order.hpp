#pragma once

#include "mideal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mideal {

// Quadratic order of discriminant D (= 0 or 1 mod 4, not a square),
// O = Z[w] with w = (D + sqrt(D))/2, so w^2 = D*w - (D^2 - D)/4.
struct QuadraticOrder {
  Int disc;       // D
  Int fund_disc;  // D0, fundamental
  Int conductor;  // f, D = f^2 * D0

  static QuadraticOrder from_disc(const Int& d);
  QuadraticOrder maximal_order() const { return from_disc(fund_disc); }
  bool integrally_closed() const { return conductor == 1; }
  Int omega_norm() const { return (disc * disc - disc) / 4; }  // w * conj(w)
  bool operator==(const QuadraticOrder& o) const { return disc == o.disc; }
};

// Element x + y*sqrt(D0) of the quadratic field, exact rational x, y.
struct QElem {
  Rat x, y;

  bool is_zero() const { return x == 0 && y == 0; }
  bool operator==(const QElem& o) const { return x == o.x && y == o.y; }
  std::string str() const;
};

QElem qadd(const QElem& a, const QElem& b);
QElem qsub(const QElem& a, const QElem& b);
QElem qmul(const QuadraticOrder& O, const QElem& a, const QElem& b);
QElem qneg(const QElem& a);
Rat qnorm(const QuadraticOrder& O, const QElem& a);  // x^2 - D0*y^2

// Coordinates u + v*w in the order's basis (1, w).
struct WCoord {
  Rat u, v;
};
WCoord to_wcoord(const QuadraticOrder& O, const QElem& e);
QElem from_wcoord(const QuadraticOrder& O, const WCoord& c);

// Fractional O-module (1/den)(a*Z + (b + c*w)Z) in Hermite form:
// a > 0, c > 0, c | a, c | b, 0 <= b < a, gcd(den, a, b, c) = 1,
// closed under multiplication by w (checked on construction).
struct LatticeIdeal {
  QuadraticOrder order;
  Int den = 1, a = 1, b = 0, c = 1;

  bool operator==(const LatticeIdeal& o) const {
    return order == o.order && den == o.den && a == o.a && b == o.b && c == o.c;
  }
  Rat norm() const { return Rat(a * c, den * den); }
  std::string str() const;
};

// Plain rank-2 lattice in the fixed field basis (1, w0) of the maximal
// order, for order-independent set comparison of semistar values.
struct AbsLattice {
  Int den = 1, a = 1, b = 0, c = 1;
  bool operator==(const AbsLattice& o) const {
    return den == o.den && a == o.a && b == o.b && c == o.c;
  }
};
AbsLattice absolute_lattice(const LatticeIdeal& I);

LatticeIdeal unit_ideal(const QuadraticOrder& O);
LatticeIdeal principal_ideal(const QuadraticOrder& O, const QElem& z);
LatticeIdeal from_generators(const QuadraticOrder& O, const std::vector<QElem>& gens);
// Raw lattice from explicit Hermite data (validates the module condition).
LatticeIdeal make_lattice_ideal(const QuadraticOrder& O, Int den, Int a, Int b, Int c);

LatticeIdeal multiply(const LatticeIdeal& I, const LatticeIdeal& J);
// (I : J) = {z in K : zJ subset I}; J nonzero by construction.
LatticeIdeal colon(const LatticeIdeal& I, const LatticeIdeal& J);
LatticeIdeal invert(const LatticeIdeal& I);     // (O : I)
LatticeIdeal v_closure(const LatticeIdeal& I);  // (O : (O : I))
LatticeIdeal intersect(const LatticeIdeal& I, const LatticeIdeal& J);
LatticeIdeal scale(const LatticeIdeal& I, const QElem& z);

bool lattice_contains(const LatticeIdeal& I, const QElem& z);
bool lattice_subset(const LatticeIdeal& I, const LatticeIdeal& J);  // I subset J
// Basis of I as field elements (after dividing by den).
std::vector<QElem> lattice_basis(const LatticeIdeal& I);

bool is_invertible(const LatticeIdeal& I);
bool is_v_invertible(const LatticeIdeal& I);

// I * O' over a larger order O' (same fundamental discriminant,
// conductor dividing I's).
LatticeIdeal extend_to_order(const LatticeIdeal& I, const QuadraticOrder& Oprime);
// Reinterpret an O'-module as a module over the smaller order O.
LatticeIdeal restrict_to_order(const LatticeIdeal& I, const QuadraticOrder& O);

std::vector<LatticeIdeal> maximal_ideals_up_to(const QuadraticOrder& O, const Int& norm_bound);

// Exact for D < 0 (positive definite norm form); bounded search for D > 0.
std::optional<QElem> principal_generator(const LatticeIdeal& I);
bool is_principal(const LatticeIdeal& I);

// All integral ideals of norm <= bound (canonical Hermite enumeration).
std::vector<LatticeIdeal> integral_ideals_up_to(const QuadraticOrder& O, const Int& norm_bound);

}  // namespace mideal
