#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mideal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// Largest integer <= r.
inline Int floor_int(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline Int ceil_int(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

/// True iff n is a (nonnegative) power of p.
inline bool is_power_of(const Int& n_, const Int& p) {
  Int n = n_;
  if (n <= 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime_small(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Serialize as "p" or "p/q" (decimal-free exact form).
inline std::string rat_str(const Rat& r) {
  std::string s = num(r).str();
  if (!is_integer(r)) s += "/" + den(r).str();
  return s;
}

/// Parse "p", "-p", "p/q".  Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view s);

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace mideal
