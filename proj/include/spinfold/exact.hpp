#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.numerator() == b && a.denominator() == 1; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator<(const rational<std::int64_t>& a, int b) { return a < rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, int b) { return a > rational<std::int64_t>(b); }
inline bool operator<=(const rational<std::int64_t>& a, int b) { return a <= rational<std::int64_t>(b); }
inline bool operator>=(const rational<std::int64_t>& a, int b) { return a >= rational<std::int64_t>(b); }
} // namespace boost

namespace spinfold {

using Rational = boost::rational<std::int64_t>;

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t hcf(const std::vector<int>& xs);

/// reduce a turn into [0,1)
Rational frac(Rational t);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

/// Element of Q(zeta_n), stored in the power basis of degree < phi(n).
class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(Rational q);
  Cyclotomic(std::int64_t q) : Cyclotomic(Rational(q)) {}

  /// exp(2 pi i t)
  static Cyclotomic root(Rational turn);
  static Cyclotomic imag_unit();

  int order() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational() const;
  Cyclotomic conj() const;
  Rational real_part() const;
  Cyclotomic lifted(int n) const;

  /// If this equals q * exp(2 pi i t) with q > 0 rational, return (q, t) with t in [0,1).
  std::optional<std::pair<Rational, Rational>> as_scaled_root() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Canonical text at the current order, used for hashing and memo keys.
  std::string key() const;
  std::string str() const;

private:
  Cyclotomic(int n, std::vector<Rational> c);
  void reduce();

  int n_ = 1;
  std::vector<Rational> c_;
};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);
int euler_phi(int n);

} // namespace spinfold
