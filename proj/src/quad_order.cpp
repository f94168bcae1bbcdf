#include "mideal/quad_order.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mideal {

namespace {

Int mod4(const Int& d) { return ((d % 4) + 4) % 4; }

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

bool squarefree(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

bool is_fundamental(const Int& m) {
  if (m == 1) return false;
  if (mod4(m) == 1) return squarefree(m);
  if (mod4(m) == 0) {
    Int q = m / 4;
    Int r = mod4(q);
    return squarefree(q) && (r == 2 || r == 3);
  }
  return false;
}

Int pos_mod(const Int& x, const Int& m) { return ((x % m) + m) % m; }

}  // namespace

QuadraticOrder QuadraticOrder::from_disc(const Int& d) {
  if (mod4(d) != 0 && mod4(d) != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  if (d == 0 || d == 1 || is_square(d)) throw std::invalid_argument("discriminant must not be a square");
  QuadraticOrder O;
  O.disc = d;
  Int ad = d < 0 ? Int(-d) : d;
  for (Int f = 1; f * f <= ad; ++f) {
    if (d % (f * f) != 0) continue;
    Int m = d / (f * f);
    if (is_fundamental(m)) {
      O.conductor = f;
      O.fund_disc = m;
      return O;
    }
  }
  throw std::invalid_argument("no fundamental discriminant found");
}

std::string QElem::str() const {
  if (y == 0) return rat_str(x);
  std::string s;
  if (x != 0) s = rat_str(x) + (y > 0 ? "+" : "");
  std::string ys = y == 1 ? "" : (y == -1 ? "-" : rat_str(y) + "*");
  return s + ys + "sqrt(D0)";
}

QElem qadd(const QElem& a, const QElem& b) { return QElem{a.x + b.x, a.y + b.y}; }
QElem qsub(const QElem& a, const QElem& b) { return QElem{a.x - b.x, a.y - b.y}; }
QElem qneg(const QElem& a) { return QElem{-a.x, -a.y}; }

QElem qmul(const QuadraticOrder& O, const QElem& a, const QElem& b) {
  return QElem{a.x * b.x + a.y * b.y * Rat(O.fund_disc), a.x * b.y + a.y * b.x};
}

Rat qnorm(const QuadraticOrder& O, const QElem& a) {
  return a.x * a.x - Rat(O.fund_disc) * a.y * a.y;
}

WCoord to_wcoord(const QuadraticOrder& O, const QElem& e) {
  // w = (D + f*sqrt(D0))/2, so y = v*f/2 and x = u + v*D/2.
  Rat v = 2 * e.y / Rat(O.conductor);
  Rat u = e.x - v * Rat(O.disc) / 2;
  return WCoord{u, v};
}

QElem from_wcoord(const QuadraticOrder& O, const WCoord& c) {
  return QElem{c.u + c.v * Rat(O.disc) / 2, c.v * Rat(O.conductor) / 2};
}

namespace {

struct Row {
  Int u, v;
};

// Hermite form of the lattice spanned by integer rows (u = coeff of 1,
// v = coeff of w): basis (A, 0), (B, C) with A, C > 0, 0 <= B < A.
struct Hnf {
  Int A, B, C;
};

Hnf hnf_rows(std::vector<Row> rows) {
  // gcd-reduce the v column down to a single nonzero entry
  while (true) {
    int piv = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].v == 0) continue;
      if (piv < 0 || boost::multiprecision::abs(rows[i].v) <
                         boost::multiprecision::abs(rows[piv].v))
        piv = static_cast<int>(i);
    }
    if (piv < 0) throw std::invalid_argument("degenerate lattice (rank < 2)");
    bool reduced = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == piv || rows[i].v == 0) continue;
      Int q = rows[i].v / rows[piv].v;
      rows[i].u -= q * rows[piv].u;
      rows[i].v -= q * rows[piv].v;
      if (rows[i].v != 0) reduced = false;
    }
    if (reduced) {
      std::swap(rows[piv], rows.back());
      break;
    }
  }
  Row gen2 = rows.back();
  rows.pop_back();
  if (gen2.v < 0) {
    gen2.u = -gen2.u;
    gen2.v = -gen2.v;
  }
  Int A = 0;
  for (auto& r : rows) A = gcd_int(A, r.u);
  if (A == 0) throw std::invalid_argument("degenerate lattice (rank < 2)");
  if (A < 0) A = -A;
  Hnf h;
  h.A = A;
  h.C = gen2.v;
  h.B = pos_mod(gen2.u, A);
  return h;
}

void check_module(const QuadraticOrder& O, const Int& a, const Int& b, const Int& c) {
  if (a <= 0 || c <= 0) throw std::invalid_argument("bad lattice data");
  if (a % c != 0 || b % c != 0) throw std::invalid_argument("lattice is not an order module");
  Int n = O.omega_norm();
  Int t = b * b + b * c * O.disc + c * c * n;
  if (t % c != 0 || (t / c) % a != 0)
    throw std::invalid_argument("lattice is not an order module");
}

LatticeIdeal reduce(const QuadraticOrder& O, Int den, Hnf h, bool validate) {
  if (den < 0) {
    den = -den;
  }
  if (den == 0) throw std::invalid_argument("zero denominator");
  Int g = gcd_int(gcd_int(den, h.A), gcd_int(h.B, h.C));
  LatticeIdeal I;
  I.order = O;
  I.den = den / g;
  I.a = h.A / g;
  I.c = h.C / g;
  I.b = pos_mod(h.B / g, I.a);
  if (validate) check_module(O, I.a, I.b, I.c);
  return I;
}

// w-coordinate product using w^2 = D*w - n.
Row wmul(const QuadraticOrder& O, const Row& p, const Row& q) {
  Int n = O.omega_norm();
  return Row{p.u * q.u - n * p.v * q.v, p.u * q.v + p.v * q.u + O.disc * p.v * q.v};
}

LatticeIdeal from_rational_rows(const QuadraticOrder& O,
                                const std::vector<std::pair<Rat, Rat>>& rws,
                                bool close_under_w, bool validate) {
  Int L = 1;
  for (auto& [u, v] : rws) {
    L = L / gcd_int(L, den(u)) * den(u);
    L = L / gcd_int(L, den(v)) * den(v);
  }
  std::vector<Row> rows;
  for (auto& [u, v] : rws) {
    Row r{num(u) * (L / den(u)), num(v) * (L / den(v))};
    rows.push_back(r);
    if (close_under_w) rows.push_back(wmul(O, r, Row{0, 1}));
  }
  return reduce(O, L, hnf_rows(std::move(rows)), validate);
}

}  // namespace

AbsLattice absolute_lattice(const LatticeIdeal& I) {
  // w = e + f*w0 with w0 = (D0 + sqrt(D0))/2 and e = D0*f*(f-1)/2.
  const Int& f = I.order.conductor;
  Int e = I.order.fund_disc * f * (f - 1) / 2;
  std::vector<Row> rows = {Row{I.a, 0}, Row{I.b + I.c * e, I.c * f}};
  Hnf h = hnf_rows(std::move(rows));
  Int g = gcd_int(gcd_int(I.den, h.A), gcd_int(h.B, h.C));
  AbsLattice r;
  r.den = I.den / g;
  r.a = h.A / g;
  r.c = h.C / g;
  r.b = pos_mod(h.B / g, r.a);
  return r;
}

LatticeIdeal unit_ideal(const QuadraticOrder& O) {
  LatticeIdeal I;
  I.order = O;
  return I;
}

LatticeIdeal make_lattice_ideal(const QuadraticOrder& O, Int den, Int a, Int b, Int c) {
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  return reduce(O, den, Hnf{a, b, c}, true);
}

LatticeIdeal from_generators(const QuadraticOrder& O, const std::vector<QElem>& gens) {
  std::vector<std::pair<Rat, Rat>> rows;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    WCoord c = to_wcoord(O, g);
    rows.emplace_back(c.u, c.v);
  }
  if (rows.empty()) throw std::invalid_argument("no nonzero generators");
  return from_rational_rows(O, rows, true, true);
}

LatticeIdeal principal_ideal(const QuadraticOrder& O, const QElem& z) {
  return from_generators(O, {z});
}

LatticeIdeal multiply(const LatticeIdeal& I, const LatticeIdeal& J) {
  if (!(I.order == J.order)) throw std::invalid_argument("order mismatch");
  const QuadraticOrder& O = I.order;
  std::array<Row, 2> bi{Row{I.a, 0}, Row{I.b, I.c}};
  std::array<Row, 2> bj{Row{J.a, 0}, Row{J.b, J.c}};
  std::vector<Row> rows;
  for (auto& p : bi)
    for (auto& q : bj) rows.push_back(wmul(O, p, q));
  return reduce(O, I.den * J.den, hnf_rows(std::move(rows)), true);
}

namespace {

// Solution lattice of {z in Q^2 : A_i z in Z^2 for each stacked 2x2 A_i},
// canonicalized as a fractional ideal of O.
LatticeIdeal solve_integrality(const QuadraticOrder& O,
                               const std::vector<std::array<Rat, 4>>& mats) {
  Int L = 1;
  for (auto& m : mats)
    for (auto& e : m) L = L / gcd_int(L, den(e)) * den(e);
  // integer condition rows: C z = 0 mod L, C stacked row-wise
  std::vector<std::array<Int, 2>> C;
  for (auto& m : mats) {
    C.push_back({num(m[0]) * (L / den(m[0])), num(m[1]) * (L / den(m[1]))});
    C.push_back({num(m[2]) * (L / den(m[2])), num(m[3]) * (L / den(m[3]))});
  }
  // row-reduce C to [H; 0] with H upper triangular
  auto reduce_col = [&](std::size_t from, int col) -> std::size_t {
    while (true) {
      int piv = -1;
      for (std::size_t i = from; i < C.size(); ++i) {
        if (C[i][col] == 0) continue;
        if (piv < 0 || boost::multiprecision::abs(C[i][col]) <
                           boost::multiprecision::abs(C[piv][col]))
          piv = static_cast<int>(i);
      }
      if (piv < 0) throw std::invalid_argument("degenerate integrality system");
      bool done = true;
      for (std::size_t i = from; i < C.size(); ++i) {
        if (static_cast<int>(i) == piv || C[i][col] == 0) continue;
        Int q = C[i][col] / C[piv][col];
        C[i][0] -= q * C[piv][0];
        C[i][1] -= q * C[piv][1];
        if (C[i][col] != 0) done = false;
      }
      if (done) {
        std::swap(C[from], C[piv]);
        return from;
      }
    }
  };
  reduce_col(0, 0);
  reduce_col(1, 1);
  Int h00 = C[0][0], h01 = C[0][1], h11 = C[1][1];
  if (h00 < 0) {
    h00 = -h00;
    h01 = -h01;
  }
  if (h11 < 0) h11 = -h11;
  // solutions: z in L * H^{-1} Z^2
  std::vector<std::pair<Rat, Rat>> basis = {
      {Rat(L, h00), Rat(0)},
      {Rat(-L * h01, h00 * h11), Rat(L, h11)},
  };
  return from_rational_rows(O, basis, false, true);
}

std::array<Rat, 4> lattice_inverse_times(const LatticeIdeal& I, const Rat& s,
                                         const std::array<Rat, 4>& M) {
  // s * B_I^{-1} * M with B_I = [[a, b], [0, c]]
  Rat ia = Rat(1) / Rat(I.a), ic = Rat(1) / Rat(I.c);
  Rat binv00 = ia, binv01 = -Rat(I.b) * ia * ic, binv11 = ic;
  return {s * (binv00 * M[0] + binv01 * M[2]), s * (binv00 * M[1] + binv01 * M[3]),
          s * binv11 * M[2], s * binv11 * M[3]};
}

std::array<Rat, 4> mult_matrix(const QuadraticOrder& O, const Row& g) {
  // matrix of multiplication by g on column vectors (u, v)
  Int n = O.omega_norm();
  return {Rat(g.u), Rat(-n * g.v), Rat(g.v), Rat(g.u + O.disc * g.v)};
}

const std::array<Rat, 4> kIdentity = {Rat(1), Rat(0), Rat(0), Rat(1)};

}  // namespace

LatticeIdeal colon(const LatticeIdeal& I, const LatticeIdeal& J) {
  if (!(I.order == J.order)) throw std::invalid_argument("order mismatch");
  const QuadraticOrder& O = I.order;
  Rat s = Rat(I.den, J.den);
  std::vector<std::array<Rat, 4>> mats;
  mats.push_back(lattice_inverse_times(I, s, mult_matrix(O, Row{J.a, 0})));
  mats.push_back(lattice_inverse_times(I, s, mult_matrix(O, Row{J.b, J.c})));
  return solve_integrality(O, mats);
}

LatticeIdeal invert(const LatticeIdeal& I) { return colon(unit_ideal(I.order), I); }

LatticeIdeal v_closure(const LatticeIdeal& I) { return invert(invert(I)); }

LatticeIdeal intersect(const LatticeIdeal& I, const LatticeIdeal& J) {
  if (!(I.order == J.order)) throw std::invalid_argument("order mismatch");
  std::vector<std::array<Rat, 4>> mats;
  mats.push_back(lattice_inverse_times(I, Rat(I.den), kIdentity));
  mats.push_back(lattice_inverse_times(J, Rat(J.den), kIdentity));
  return solve_integrality(I.order, mats);
}

LatticeIdeal scale(const LatticeIdeal& I, const QElem& z) {
  return multiply(I, principal_ideal(I.order, z));
}

bool lattice_contains(const LatticeIdeal& I, const QElem& z) {
  WCoord c = to_wcoord(I.order, z);
  Rat x2 = Rat(I.den) * c.v / Rat(I.c);
  if (!is_integer(x2)) return false;
  Rat x1 = (Rat(I.den) * c.u - Rat(I.b) * x2) / Rat(I.a);
  return is_integer(x1);
}

std::vector<QElem> lattice_basis(const LatticeIdeal& I) {
  Rat d(I.den);
  return {from_wcoord(I.order, WCoord{Rat(I.a) / d, Rat(0)}),
          from_wcoord(I.order, WCoord{Rat(I.b) / d, Rat(I.c) / d})};
}

bool lattice_subset(const LatticeIdeal& I, const LatticeIdeal& J) {
  for (auto& e : lattice_basis(I))
    if (!lattice_contains(J, e)) return false;
  return true;
}

bool is_invertible(const LatticeIdeal& I) {
  return multiply(I, invert(I)) == unit_ideal(I.order);
}

bool is_v_invertible(const LatticeIdeal& I) {
  return v_closure(multiply(I, invert(I))) == unit_ideal(I.order);
}

LatticeIdeal extend_to_order(const LatticeIdeal& I, const QuadraticOrder& Op) {
  if (I.order.fund_disc != Op.fund_disc || I.order.conductor % Op.conductor != 0)
    throw std::invalid_argument("not an overring of the ideal's order");
  // w = e + t*w' with t = f/f', e = D'*t*(t-1)/2
  Int t = I.order.conductor / Op.conductor;
  Int e = Op.disc * t * (t - 1) / 2;
  Rat d(I.den);
  std::vector<std::pair<Rat, Rat>> rows = {
      {Rat(I.a) / d, Rat(0)},
      {Rat(I.b + I.c * e) / d, Rat(I.c * t) / d},
  };
  return from_rational_rows(Op, rows, true, true);
}

LatticeIdeal restrict_to_order(const LatticeIdeal& I, const QuadraticOrder& O) {
  if (I.order.fund_disc != O.fund_disc || O.conductor % I.order.conductor != 0)
    throw std::invalid_argument("not a subring of the ideal's order");
  // w' = (w - e)/t viewed from the smaller order's basis
  Int t = O.conductor / I.order.conductor;
  Int e = I.order.disc * t * (t - 1) / 2;
  Rat d(I.den);
  Rat tt(t);
  std::vector<std::pair<Rat, Rat>> rows = {
      {Rat(I.a) / d, Rat(0)},
      {(Rat(I.b) - Rat(I.c * e) / tt) / d, Rat(I.c) / tt / d},
  };
  return from_rational_rows(O, rows, false, true);
}

std::vector<LatticeIdeal> maximal_ideals_up_to(const QuadraticOrder& O, const Int& norm_bound) {
  if (norm_bound < 2) return {};
  std::vector<LatticeIdeal> out;
  Int n = O.omega_norm();
  for (Int p = 2; p <= norm_bound; ++p) {
    if (!is_prime_small(p)) continue;
    bool any_root = false;
    for (Int r = 0; r < p; ++r) {
      if (pos_mod(r * r - O.disc * r + n, p) == 0) {
        any_root = true;
        out.push_back(make_lattice_ideal(O, 1, p, pos_mod(-r, p), 1));
      }
    }
    if (!any_root && p * p <= norm_bound)
      out.push_back(make_lattice_ideal(O, 1, p, 0, p));  // inert: pO
  }
  return out;
}

std::optional<QElem> principal_generator(const LatticeIdeal& I) {
  const QuadraticOrder& O = I.order;
  Int n = O.omega_norm();
  Int T = I.a * I.c;
  auto candidate = [&](const Int& U, const Int& V) -> std::optional<QElem> {
    Int N = U * U + U * V * O.disc + V * V * n;
    if (N != T && N != -T) return std::nullopt;
    QElem z = from_wcoord(O, WCoord{Rat(U, I.den), Rat(V, I.den)});
    if (principal_ideal(O, z) == I) return z;
    return std::nullopt;
  };
  if (O.disc < 0) {
    // N(U + Vw) = (U + V*D/2)^2 + V^2*|D|/4, positive definite
    Int kmax = boost::multiprecision::sqrt(Int(4) * T / -O.disc) / I.c + 1;
    Int s = boost::multiprecision::sqrt(T) + 1;
    for (Int k = -kmax; k <= kmax; ++k) {
      Int V = k * I.c;
      // |U + V*D/2| <= sqrt(T): U in [-V*D/2 - s, -V*D/2 + s]
      Rat mid = -Rat(V * O.disc) / 2;
      Int Ulo = floor_int(mid - Rat(s)), Uhi = ceil_int(mid + Rat(s));
      // U = m*a + k*b
      Int mlo = floor_int(Rat(Ulo - k * I.b, I.a)) - 1;
      Int mhi = ceil_int(Rat(Uhi - k * I.b, I.a)) + 1;
      for (Int m = mlo; m <= mhi; ++m) {
        if (m == 0 && k == 0) continue;
        if (auto z = candidate(m * I.a + k * I.b, V)) return z;
      }
    }
    return std::nullopt;
  }
  // real quadratic: bounded best-effort search (units can push the
  // smallest generator outside any fixed box)
  const Int B = 40;
  for (Int k = -B; k <= B; ++k)
    for (Int m = -B; m <= B; ++m) {
      if (m == 0 && k == 0) continue;
      if (auto z = candidate(m * I.a + k * I.b, k * I.c)) return z;
    }
  return std::nullopt;
}

bool is_principal(const LatticeIdeal& I) { return principal_generator(I).has_value(); }

std::vector<LatticeIdeal> integral_ideals_up_to(const QuadraticOrder& O, const Int& norm_bound) {
  std::vector<LatticeIdeal> out;
  Int n = O.omega_norm();
  for (Int c = 1; c * c <= norm_bound; ++c)
    for (Int a = c; a * c <= norm_bound; a += c)
      for (Int b = 0; b < a; b += c) {
        Int t = b * b + b * c * O.disc + c * c * n;
        if ((t / c) % a == 0) out.push_back(make_lattice_ideal(O, 1, a, b, c));
      }
  return out;
}

std::string LatticeIdeal::str() const {
  std::string s = "(" + a.str() + ", " + b.str() + "+" + c.str() + "w)";
  if (den != 1) s = "(1/" + den.str() + ")" + s;
  return s;
}

}  // namespace mideal
