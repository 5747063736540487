#include "spinfold/exact.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinfold {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t hcf(const std::vector<int>& xs) {
  std::int64_t g = 0;
  for (int x : xs) g = std::gcd(g, static_cast<std::int64_t>(x));
  return g;
}

Rational frac(Rational t) {
  std::int64_t fl = t.numerator() / t.denominator();
  if (t.numerator() < 0 && t.numerator() % t.denominator() != 0) --fl;
  return t - Rational(fl);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(v);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long long p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    long long q = std::stoll(b, &used);
    if (used != b.size() || q == 0) throw std::invalid_argument(s);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2, m = n; m > 1; ++p) {
    if (p * p > m) p = m;
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  }
  return r;
}

namespace {

std::vector<std::int64_t> poly_divexact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  std::vector<std::int64_t> q(nn - dn + 1, 0);
  for (int j = nn; j >= dn; --j) {
    std::int64_t t = num[j];
    q[j - dn] = t;
    for (int i = 0; i <= dn; ++i) num[j - dn + i] -= t * den[i];
  }
  return q;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int d = 1; d <= n; ++d) {
    if (n % d || cache.count(d)) continue;
    std::vector<std::int64_t> p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) p = poly_divexact(p, cache.at(e));
    cache.emplace(d, p);
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic() : n_(1), c_{Rational(0)} {}
Cyclotomic::Cyclotomic(Rational q) : n_(1), c_{q} {}
Cyclotomic::Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) { reduce(); }

Cyclotomic Cyclotomic::root(Rational turn) {
  Rational t = frac(turn);
  int n = static_cast<int>(t.denominator());
  std::vector<Rational> c(n, Rational(0));
  c[static_cast<int>(t.numerator())] = 1;
  return Cyclotomic(n, c);
}

Cyclotomic Cyclotomic::imag_unit() { return root(Rational(1, 4)); }

void Cyclotomic::reduce() {
  if (static_cast<int>(c_.size()) > n_) {
    std::vector<Rational> f(n_, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) f[k % n_] += c_[k];
    c_ = std::move(f);
  }
  const auto& phi = cyclotomic_polynomial(n_);
  int deg = static_cast<int>(phi.size()) - 1;
  for (int j = static_cast<int>(c_.size()) - 1; j >= deg; --j) {
    Rational t = c_[j];
    if (t == 0) continue;
    for (int i = 0; i <= deg; ++i) c_[j - deg + i] -= t * Rational(phi[i]);
  }
  c_.resize(deg, Rational(0));
}

bool Cyclotomic::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::lifted(int n) const {
  if (n % n_) throw std::invalid_argument("cyclotomic lift to a non-multiple order");
  if (n == n_) return *this;
  int s = n / n_;
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[k * s] = c_[k];
  return Cyclotomic(n, c);
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> c(n_, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[(n_ - static_cast<int>(k)) % n_] += c_[k];
  return Cyclotomic(n_, c);
}

Rational Cyclotomic::real_part() const {
  Cyclotomic s = *this + conj();
  return s.rational() / 2;
}

std::optional<std::pair<Rational, Rational>> Cyclotomic::as_scaled_root() const {
  if (is_zero()) return std::nullopt;
  int n = static_cast<int>(lcm64(n_, 2));
  for (int e = 0; e < n; ++e) {
    Cyclotomic y = *this * root(Rational(-e, n));
    if (y.is_rational() && y.rational() > 0) return std::make_pair(y.rational(), Rational(e, n));
  }
  return std::nullopt;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  int n = static_cast<int>(lcm64(n_, o.n_));
  Cyclotomic a = lifted(n), b = o.lifted(n);
  for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
  *this = a;
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  int n = static_cast<int>(lcm64(n_, o.n_));
  Cyclotomic a = lifted(n), b = o.lifted(n);
  std::vector<Rational> c(a.c_.size() + b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  *this = Cyclotomic(n, c);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  if (o.is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (o.is_rational()) {
    Rational q = o.rational();
    for (auto& x : c_) x /= q;
    return *this;
  }
  int n = o.n_;
  int d = static_cast<int>(o.c_.size());
  // columns: o * zeta^j
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> basis(n, Rational(0));
    basis[j] = 1;
    Cyclotomic col = o * Cyclotomic(n, basis);
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (int col = 0, row = 0; col < d; ++col, ++row) {
    int p = row;
    while (m[p][col] == 0) ++p;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int k = col; k <= d; ++k) m[r][k] -= f * m[row][k];
    }
  }
  std::vector<Rational> inv(d);
  for (int i = 0; i < d; ++i) inv[i] = m[i][d];
  return *this *= Cyclotomic(n, inv);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int n = static_cast<int>(lcm64(a.n_, b.n_));
  return a.lifted(n).c_ == b.lifted(n).c_;
}

std::string Cyclotomic::key() const {
  std::string s = std::to_string(n_) + ":";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ",";
    s += to_string(c_[k]);
  }
  return s;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return to_string(rational());
  if (4 % n_ == 0) {
    Cyclotomic x = lifted(4);
    Rational re = x.c_[0], im = x.c_[1];
    std::ostringstream os;
    if (re != 0) os << to_string(re) << (im > 0 ? "+" : "");
    if (im == 1) os << "i";
    else if (im == -1) os << "-i";
    else os << to_string(im) << "i";
    return os.str();
  }
  if (auto r = as_scaled_root()) {
    std::string q = r->first == 1 ? "" : to_string(r->first) + "*";
    return q + "e(" + to_string(r->second) + ")";
  }
  return "[" + key() + "]";
}

} // namespace spinfold
