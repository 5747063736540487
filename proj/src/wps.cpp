#include "spinfold/wps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace spinfold {

WeightSystem::WeightSystem(std::vector<int> w) : weights(std::move(w)) {
  if (weights.size() < 2) throw std::invalid_argument("a weight system needs at least two weights");
  if (weights.size() > 16) throw std::invalid_argument("at most 16 weights are supported");
  for (int a : weights)
    if (a <= 0) throw std::invalid_argument("weights must be positive");
}

bool WeightSystem::normalized() const { return hcf(weights) == 1; }
int WeightSystem::sum() const { return std::accumulate(weights.begin(), weights.end(), 0); }

std::string WeightSystem::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << weights[i];
  os << ")";
  return os.str();
}

unsigned mask_of(const std::vector<int>& support) {
  unsigned m = 0;
  for (int i : support) m |= 1u << i;
  return m;
}

std::vector<int> support_of(unsigned mask) {
  std::vector<int> s;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1u) s.push_back(i);
  return s;
}

std::string Stratum::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < support.size(); ++i) os << (i ? "," : "") << support[i];
  os << "}";
  return os.str();
}

Stratum stratum_of(const WeightSystem& w, const std::vector<int>& support) {
  if (support.empty()) throw std::invalid_argument("empty support");
  Stratum s;
  s.support = support;
  std::sort(s.support.begin(), s.support.end());
  s.support.erase(std::unique(s.support.begin(), s.support.end()), s.support.end());
  std::vector<int> ws;
  for (int i : s.support) {
    if (i < 0 || i >= w.size()) throw std::invalid_argument("support index out of range");
    ws.push_back(w[i]);
  }
  s.k = static_cast<int>(hcf(ws));
  return s;
}

std::vector<Stratum> singular_strata(const WeightSystem& w) {
  unsigned full = (1u << w.size()) - 1;
  std::vector<unsigned> sing;
  for (unsigned m = 1; m <= full; ++m)
    if (stratum_of(w, support_of(m)).k > 1) sing.push_back(m);
  std::vector<Stratum> out;
  for (unsigned m : sing) {
    bool maximal = std::none_of(sing.begin(), sing.end(), [&](unsigned o) { return o != m && (o & m) == m; });
    if (maximal) out.push_back(stratum_of(w, support_of(m)));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) { return a.support < b.support; });
  return out;
}

int chi_wps(const WeightSystem& w) { return w.size(); }

std::int64_t count_monomials(const WeightSystem& w, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<std::int64_t> dp(degree + 1, 0);
  dp[0] = 1;
  for (int a : w.weights)
    for (int x = a; x <= degree; ++x)
      if (__builtin_add_overflow(dp[x], dp[x - a], &dp[x])) throw std::overflow_error("monomial count overflow");
  return dp[degree];
}

std::int64_t aut_dimension(const WeightSystem& w) {
  std::int64_t n = -1;
  for (int a : w.weights) n += count_monomials(w, a);
  return n;
}

bool operator<(const WpsPoint& a, const WpsPoint& b) {
  return std::tie(a.support, a.modulus, a.phase, a.D) < std::tie(b.support, b.modulus, b.phase, b.D);
}

WpsPoint canonical_point(const WeightSystem& w, std::vector<int> support, std::vector<Rational> modulus,
                         std::vector<Rational> phase, int D) {
  if (support.empty() || support.size() != modulus.size() || support.size() != phase.size())
    throw std::invalid_argument("malformed point data");
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return support[i] < support[j]; });
  WpsPoint p;
  p.D = D;
  for (auto i : order) {
    if (modulus[i] <= 0) throw std::invalid_argument("moduli must be positive");
    p.support.push_back(support[i]);
    p.modulus.push_back(modulus[i]);
    p.phase.push_back(phase[i]);
  }
  Rational y0 = p.modulus[0];
  for (auto& y : p.modulus) y /= y0;
  int a0 = w[p.support[0]];
  std::vector<Rational> best;
  for (int n = 0; n < a0; ++n) {
    Rational g = (Rational(n) - p.phase[0]) / a0;
    std::vector<Rational> cand;
    for (std::size_t i = 0; i < p.support.size(); ++i) cand.push_back(frac(p.phase[i] + g * w[p.support[i]]));
    if (best.empty() || cand < best) best = cand;
  }
  p.phase = best;
  return p;
}

std::string WpsPoint::str(const WeightSystem& w) const {
  std::vector<std::string> coords(w.size(), "0");
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::string ph = Cyclotomic::root(phase[i]).str();
    std::string s;
    if (modulus[i] == 1) s = ph;
    else {
      s = to_string(modulus[i]) + "^(" + to_string(Rational(w[support[i]], D)) + ")";
      if (ph != "1") s += "*" + ph;
    }
    coords[support[i]] = s;
  }
  std::string r = "[";
  for (int i = 0; i < w.size(); ++i) r += (i ? "," : "") + coords[i];
  return r + "]";
}

} // namespace spinfold
