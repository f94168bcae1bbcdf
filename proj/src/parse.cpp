#include "mideal/parse.hpp"

#include <cctype>

namespace mideal {

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Int parse_uint_at(std::string_view s, std::size_t& i) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw parse_error("expected digit", i);
  Int v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    ++i;
  }
  return v;
}

}  // namespace

Rat parse_rat(std::string_view s) {
  std::size_t i = 0;
  skip_ws(s, i);
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  skip_ws(s, i);
  Int p = parse_uint_at(s, i);
  Int q = 1;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '/') {
    ++i;
    skip_ws(s, i);
    q = parse_uint_at(s, i);
    if (q == 0) throw parse_error("zero denominator", i);
  }
  skip_ws(s, i);
  if (i != s.size()) throw parse_error("trailing input in rational", i);
  Rat r(p, q);
  return neg ? -r : r;
}

namespace {

OrderedGroup parse_group_at(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (s.substr(i, 4) == "lex(") {
    i += 4;
    std::vector<OrderedGroup> factors;
    while (true) {
      factors.push_back(parse_group_at(s, i));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw parse_error("expected ',' or ')' in lex(...)", i);
    }
    return OrderedGroup::lex(std::move(factors));
  }
  if (i < s.size() && s[i] == 'Q') {
    ++i;
    return OrderedGroup::Q();
  }
  if (i < s.size() && s[i] == 'Z') {
    ++i;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '[') {
      ++i;
      skip_ws(s, i);
      if (i >= s.size() || s[i] != '1') throw parse_error("expected Z[1/p]", i);
      ++i;
      skip_ws(s, i);
      if (i >= s.size() || s[i] != '/') throw parse_error("expected Z[1/p]", i);
      ++i;
      skip_ws(s, i);
      Int p = parse_uint_at(s, i);
      skip_ws(s, i);
      if (i >= s.size() || s[i] != ']') throw parse_error("expected ']'", i);
      ++i;
      return OrderedGroup::ZLoc(p);
    }
    return OrderedGroup::Z();
  }
  throw parse_error("expected group descriptor", i);
}

}  // namespace

OrderedGroup parse_group(std::string_view s) {
  std::size_t i = 0;
  OrderedGroup g = parse_group_at(s, i);
  skip_ws(s, i);
  if (i != s.size()) throw parse_error("trailing input in group descriptor", i);
  return g;
}

namespace {

// Polynomial expression parser (recursive descent, values are
// polynomials in X with field coefficients).
struct PolyParser {
  const QuadraticOrder& O;
  std::string_view s;
  std::size_t i = 0;

  void ws() { skip_ws(s, i); }

  bool starts_atom() {
    ws();
    if (i >= s.size()) return false;
    char c = s[i];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'X' ||
           s.substr(i, 4) == "sqrt";
  }

  QPoly parse_expr() {
    QPoly v = parse_term();
    while (true) {
      ws();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        char op = s[i++];
        QPoly w = parse_term();
        std::size_t n = std::max(v.size(), w.size());
        v.resize(n);
        w.resize(n);
        for (std::size_t k = 0; k < n; ++k)
          v[k] = op == '+' ? qadd(v[k], w[k]) : qsub(v[k], w[k]);
        v = qp_normalize(std::move(v));
      } else {
        return v;
      }
    }
  }

  QPoly parse_term() {
    QPoly v = parse_factor();
    while (true) {
      ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        v = qp_mul(O, v, parse_factor());
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        QPoly w = parse_factor();
        if (w.size() != 1) throw parse_error("can only divide by a constant", i);
        QElem d = w[0];
        Rat nrm = qnorm(O, d);
        if (nrm == 0) throw parse_error("division by zero", i);
        QElem inv{d.x / nrm, -d.y / nrm};
        for (auto& c : v) c = qmul(O, c, inv);
      } else if (starts_atom()) {
        v = qp_mul(O, v, parse_factor());  // juxtaposition, e.g. "2X"
      } else {
        return v;
      }
    }
  }

  QPoly parse_factor() {
    ws();
    bool neg = false;
    while (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      if (s[i] == '-') neg = !neg;
      ++i;
      ws();
    }
    QPoly v = parse_atom();
    ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      ws();
      Int e = parse_uint_at(s, i);
      QPoly r = {QElem{1, 0}};
      for (Int k = 0; k < e; ++k) r = qp_mul(O, r, v);
      v = std::move(r);
    }
    if (neg)
      for (auto& c : v) c = qneg(c);
    return v;
  }

  QPoly parse_atom() {
    ws();
    if (i >= s.size()) throw parse_error("unexpected end of expression", i);
    if (s[i] == '(') {
      ++i;
      QPoly v = parse_expr();
      ws();
      if (i >= s.size() || s[i] != ')') throw parse_error("expected ')'", i);
      ++i;
      return v;
    }
    if (s[i] == 'X') {
      ++i;
      return QPoly{QElem{0, 0}, QElem{1, 0}};
    }
    if (s.substr(i, 4) == "sqrt") {
      i += 4;
      ws();
      if (i >= s.size() || s[i] != '(') throw parse_error("expected '(' after sqrt", i);
      ++i;
      ws();
      bool mneg = false;
      if (i < s.size() && s[i] == '-') {
        mneg = true;
        ++i;
      }
      Int m = parse_uint_at(s, i);
      if (mneg) m = -m;
      ws();
      if (i >= s.size() || s[i] != ')') throw parse_error("expected ')'", i);
      ++i;
      // sqrt(m) = r * sqrt(D0) needs m/D0 to be a square of a rational
      Rat q = Rat(m) / Rat(O.fund_disc);
      Int rn = boost::multiprecision::sqrt(num(q) < 0 ? Int(0) : num(q));
      Int rd = boost::multiprecision::sqrt(den(q));
      if (num(q) < 0 || rn * rn != num(q) || rd * rd != den(q))
        throw parse_error("sqrt argument not expressible in this field", i);
      return QPoly{QElem{0, Rat(rn, rd)}};
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      Int p = parse_uint_at(s, i);
      ws();
      // fraction only when the slash is followed by a digit (so that
      // "1/2" parses here but "x / sqrt(..)" goes through parse_term)
      if (i + 1 < s.size() && s[i] == '/' &&
          std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        ws();
        Int q = parse_uint_at(s, i);
        if (q == 0) throw parse_error("zero denominator", i);
        return QPoly{QElem{Rat(p, q), 0}};
      }
      return QPoly{QElem{Rat(p), 0}};
    }
    throw parse_error("unexpected character in expression", i);
  }
};

}  // namespace

QPoly parse_qpoly(const QuadraticOrder& O, std::string_view s) {
  PolyParser p{O, s};
  QPoly v = p.parse_expr();
  p.ws();
  if (p.i != s.size()) throw parse_error("trailing input in expression", p.i);
  return qp_normalize(std::move(v));
}

QElem parse_qelem(const QuadraticOrder& O, std::string_view s) {
  QPoly v = parse_qpoly(O, s);
  if (v.size() > 1) throw parse_error("expected a constant, got a polynomial", 0);
  return v.empty() ? QElem{0, 0} : v[0];
}

JobConfig parse_config(const json& j) {
  JobConfig c;
  c.raw = j;
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  c.command = j.value("command", std::string());
  if (c.command.empty()) throw std::invalid_argument("config needs a command");
  if (j.contains("seed")) {
    c.seed = j.at("seed").get<std::uint64_t>();
    c.has_seed = true;
  }
  c.suite = j.value("suite", std::string());
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    if (b.contains("norm")) c.bounds.norm = Int(b.at("norm").get<long long>());
    if (b.contains("k")) c.bounds.grid_k = b.at("k").get<int>();
    if (b.contains("B")) c.bounds.box = b.at("B").get<int>();
    if (b.contains("samples")) c.bounds.samples = b.at("samples").get<int>();
    if (b.contains("classOrderBound"))
      c.bounds.class_order_bound = Int(b.at("classOrderBound").get<long long>());
    if (c.bounds.grid_k > 12 || c.bounds.box > 8 || c.bounds.norm > 10000)
      throw std::invalid_argument("bounds exceed documented caps (k<=12, B<=8, norm<=10^4)");
  }
  if (j.contains("backend")) {
    const json& b = j.at("backend");
    std::string type = b.value("type", std::string());
    if (type == "order") {
      c.is_order = true;
      c.order = QuadraticOrder::from_disc(Int(b.at("disc").get<long long>()));
    } else if (type == "valuation") {
      c.valuation = ValuationDomain(parse_group(b.at("group").get<std::string>()));
    } else {
      throw std::invalid_argument("backend type must be 'order' or 'valuation'");
    }
  }
  return c;
}

ValIdeal parse_val_ideal(const ValuationDomain& V, const json& j) {
  const json& cut = j.contains("cut") ? j.at("cut") : j;
  Point p;
  for (auto& e : cut.at("point")) p.push_back(parse_rat(e.get<std::string>()));
  bool open = cut.value("open", false);
  return make_ideal(V, std::move(p), open);
}

LatticeIdeal parse_ord_ideal(const QuadraticOrder& O, const json& j) {
  if (j.contains("gens")) {
    std::vector<QElem> gens;
    for (auto& g : j.at("gens")) gens.push_back(parse_qelem(O, g.get<std::string>()));
    return from_generators(O, gens);
  }
  return make_lattice_ideal(O, Int(j.value("den", 1)), Int(j.at("a").get<long long>()),
                            Int(j.at("b").get<long long>()), Int(j.at("c").get<long long>()));
}

StarOp parse_star(const ValuationDomain& V, const json& j) {
  std::string op = j.at("op").get<std::string>();
  if (op == "d") return star_d();
  if (op == "v") return star_v();
  if (op == "t") return star_t();
  if (op == "w") {
    std::vector<ValIdeal> fam;
    for (auto& h : j.at("family")) fam.push_back(parse_val_ideal(V, h));
    return star_w(V, std::move(fam));
  }
  if (op == "meet") {
    std::vector<ValPrime> primes;
    for (auto& p : j.at("overrings")) primes.push_back(ValPrime{ConvexSubgroup{p.get<int>()}});
    return star_meet(V, std::move(primes));
  }
  throw std::invalid_argument("unknown star op: " + op);
}

StarOp parse_star(const QuadraticOrder& O, const json& j) {
  std::string op = j.at("op").get<std::string>();
  if (op == "d") return star_d();
  if (op == "v") return star_v();
  if (op == "t") return star_t();
  if (op == "w") {
    std::vector<LatticeIdeal> fam;
    for (auto& h : j.at("family")) fam.push_back(parse_ord_ideal(O, h));
    return star_w(O, std::move(fam));
  }
  if (op == "meet") {
    std::vector<QuadraticOrder> ovr;
    for (auto& d : j.at("overrings")) {
      if (d.is_string() && d.get<std::string>() == "maximal")
        ovr.push_back(O.maximal_order());
      else
        ovr.push_back(QuadraticOrder::from_disc(Int(d.get<long long>())));
    }
    return star_meet(O, std::move(ovr));
  }
  throw std::invalid_argument("unknown star op: " + op);
}

VPoly parse_vpoly(const ValuationDomain& V, const json& j) {
  VPoly f;
  for (auto& coeff : j) {
    MonoSum c;
    for (auto& term : coeff) {
      Point g;
      for (auto& e : term.at("exp")) g.push_back(parse_rat(e.get<std::string>()));
      if (static_cast<int>(g.size()) != V.rank())
        throw std::invalid_argument("exponent rank mismatch");
      if (!group_member(V.group, g))
        throw std::invalid_argument("exponent outside the value group");
      c = madd(c, mono(std::move(g), parse_rat(term.at("q").get<std::string>())));
    }
    f.push_back(std::move(c));
  }
  return vp_normalize(std::move(f));
}

}  // namespace mideal
