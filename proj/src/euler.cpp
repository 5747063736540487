#include "spinfold/euler.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinfold {

namespace {

int popcount(unsigned m) { return __builtin_popcount(m); }

std::vector<unsigned> subsets_of(unsigned mask) {
  std::vector<unsigned> out;
  for (unsigned s = mask; s; s = (s - 1) & mask) out.push_back(s);
  std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t mobius_open(const std::map<unsigned, std::int64_t>& closed, unsigned s) {
  std::int64_t total = 0;
  for (unsigned t = s; t; t = (t - 1) & s) total += ((popcount(s) - popcount(t)) % 2 ? -1 : 1) * closed.at(t);
  return total;
}

std::int64_t hcf_mask(const std::vector<int>& w, unsigned mask) {
  std::int64_t g = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (mask >> i & 1u) g = std::gcd(g, static_cast<std::int64_t>(w[i]));
  return g;
}

std::string row_key(const std::map<int, Cyclotomic>& r) {
  std::string k;
  for (auto& [v, c] : r) k += std::to_string(v) + "=" + c.key() + ";";
  return k;
}

} // namespace

FermatSystem fermat_system(const WeightSystem& w, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != w.size()) throw std::invalid_argument("one exponent per weight expected");
  FermatSystem s;
  s.weights = w.weights;
  s.exponents = exponents;
  std::map<int, Cyclotomic> row;
  int d = -1;
  for (int j = 0; j < w.size(); ++j) {
    if (exponents[j] < 1) throw std::invalid_argument("exponents must be positive");
    int dj = w[j] * exponents[j];
    if (d >= 0 && dj != d)
      throw std::invalid_argument("inconsistent degrees: a_j*k_j = " + std::to_string(d) + " vs " + std::to_string(dj));
    d = dj;
    row[j] = Cyclotomic(1);
  }
  s.rows.push_back(row);
  return s;
}

FermatSystem system_of(const FermatTower& t) {
  FermatSystem s;
  s.weights = t.ambient.weights;
  s.exponents.assign(t.ambient.size(), 0);
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  int next_prime = 0;
  for (std::size_t e = 0; e < t.equations.size(); ++e) {
    const FermatEquation& eq = t.equations[e];
    if (!eq.blocks.empty())
      throw std::domain_error("equation " + std::to_string(e + 1) + " has a generic block; its chi must be supplied as data");
    std::map<int, Cyclotomic> row;
    for (const Term& term : eq.terms) {
      int& k = s.exponents[term.var];
      if (k && k != term.exp)
        throw std::domain_error("variable z" + std::to_string(term.var) + " appears with exponents " +
                                std::to_string(k) + " and " + std::to_string(term.exp));
      k = term.exp;
      Cyclotomic c = term.coeff;
      if (term.generic) c = c * Cyclotomic(primes[next_prime++ % 20]);
      row[term.var] = c;
    }
    s.rows.push_back(row);
  }
  return s;
}

std::size_t ChiMemo::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return table_.size();
}

void ChiMemo::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  table_.clear();
}

ChiMemo& shared_memo() {
  static ChiMemo memo;
  return memo;
}

std::vector<std::map<int, Cyclotomic>> normalize_rows(const std::vector<std::map<int, Cyclotomic>>& rows,
                                                      unsigned mask) {
  std::vector<std::map<int, Cyclotomic>> out;
  for (auto& r : rows) {
    std::map<int, Cyclotomic> x;
    for (auto& [v, c] : r)
      if ((mask >> v & 1u) && !c.is_zero()) x[v] = c;
    if (x.empty()) continue;
    Cyclotomic lead = x.rbegin()->second;
    for (auto& [v, c] : x) c /= lead;
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return row_key(a) < row_key(b); });
  out.erase(std::unique(out.begin(), out.end(), [](auto& a, auto& b) { return row_key(a) == row_key(b); }),
            out.end());
  return out;
}

EulerEngine::EulerEngine(ChiMemo* memo, std::vector<int> priority) : memo_(memo), priority_(std::move(priority)) {
  prefix_ = "p";
  for (int v : priority_) prefix_ += std::to_string(v) + ",";
  prefix_ += "|";
}

int EulerEngine::choose(unsigned mask) const {
  for (int v : priority_)
    if (mask >> v & 1u) return v;
  return 31 - __builtin_clz(mask);
}

std::int64_t EulerEngine::closed(const FermatSystem& s, unsigned mask) {
  if (!mask) throw std::invalid_argument("the empty support has no chi");
  return closed_rows(s, s.rows, mask);
}

std::int64_t EulerEngine::open(const FermatSystem& s, unsigned mask) {
  std::map<unsigned, std::int64_t> tab;
  for (unsigned t : subsets_of(mask)) tab[t] = closed(s, t);
  return mobius_open(tab, mask);
}

std::int64_t EulerEngine::closed_rows(const FermatSystem& s, Rows rows, unsigned mask) {
  if (!mask) return 0;
  Rows norm = normalize_rows(rows, mask);
  if (!memo_) return compute(s, norm, mask);
  std::string key = prefix_;
  for (int w : s.weights) key += std::to_string(w) + ",";
  key += "|";
  for (int k : s.exponents) key += std::to_string(k) + ",";
  key += "|" + std::to_string(mask) + "|";
  for (auto& r : norm) key += row_key(r) + "/";
  return memo_->get_or_compute(key, [&] { return compute(s, norm, mask); });
}

std::int64_t EulerEngine::compute(const FermatSystem& s, const Rows& rows, unsigned mask) {
  ++calls_;
  for (auto& r : rows)
    if (r.size() == 1) return closed_rows(s, rows, mask & ~(1u << r.begin()->first));
  if (rows.empty()) return popcount(mask);
  int v = choose(mask);
  unsigned base = mask & ~(1u << v);
  int p = -1;
  for (std::size_t i = 0; i < rows.size() && p < 0; ++i)
    if (rows[i].count(v)) p = static_cast<int>(i);
  if (p < 0) return closed_rows(s, rows, base) + 1;
  const auto& pivot = rows[p];
  Rows others;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(i) == p) continue;
    auto r = rows[i];
    auto it = r.find(v);
    if (it != r.end()) {
      Cyclotomic f = it->second / pivot.at(v);
      for (auto& [w, c] : pivot) r[w] -= f * c;
      for (auto jt = r.begin(); jt != r.end();) jt = jt->second.is_zero() ? r.erase(jt) : std::next(jt);
    }
    others.push_back(std::move(r));
  }
  Rows branch = others;
  auto rest = pivot;
  rest.erase(v);
  branch.push_back(rest);
  if (!base) return 0;
  std::map<unsigned, std::int64_t> cb, cbr;
  std::vector<unsigned> subs = subsets_of(base);
  for (unsigned t : subs) {
    cb[t] = closed_rows(s, others, t);
    cbr[t] = closed_rows(s, branch, t);
  }
  std::int64_t k = s.exponents[v];
  std::int64_t total = 0;
  for (unsigned t : subs) {
    std::int64_t l = hcf_mask(s.weights, t);
    std::int64_t m = std::gcd(l, static_cast<std::int64_t>(s.weights[v]));
    if ((k * m) % l) throw std::domain_error("non-integral fiber count k*m/l");
    std::int64_t fiber = k * m / l;
    std::int64_t ob = mobius_open(cb, t), obr = mobius_open(cbr, t);
    total += obr + (ob - obr) * fiber;
  }
  return total;
}

bool StratumChiTable::mobius_consistent() const {
  for (auto& [s, c] : closed) {
    std::int64_t sum = 0;
    for (unsigned t = s; t; t = (t - 1) & s) sum += open.at(t);
    if (sum != c) return false;
  }
  return true;
}

StratumChiTable stratum_table(const FermatSystem& s, unsigned base, ChiMemo* memo) {
  EulerEngine e(memo);
  StratumChiTable tab;
  tab.base = base;
  for (unsigned t : subsets_of(base)) tab.closed[t] = e.closed(s, t);
  for (unsigned t : subsets_of(base)) tab.open[t] = mobius_open(tab.closed, t);
  return tab;
}

std::int64_t chi_fermat(const WeightSystem& w, const std::vector<int>& exponents, std::vector<std::int64_t>* chain,
                        ChiMemo* memo) {
  FermatSystem s = fermat_system(w, exponents);
  EulerEngine e(memo);
  if (chain) {
    chain->clear();
    for (int j = 1; j < w.size(); ++j) chain->push_back(e.closed(s, (1u << (j + 1)) - 1));
    return chain->back();
  }
  return e.closed(s, s.full_mask());
}

std::int64_t chi_fermat_uncorrected(const WeightSystem& w, const std::vector<int>& exponents) {
  fermat_system(w, exponents);
  std::int64_t chi = 0;
  for (int j = 1; j < w.size(); ++j) chi = exponents[j] * j + (1 - exponents[j]) * chi;
  return chi;
}

bool correction_trivial(const WeightSystem& w) {
  for (int j = 1; j < w.size(); ++j)
    for (unsigned t = 1; t < (1u << j); ++t)
      if (w[j] % hcf_mask(w.weights, t)) return false;
  return true;
}

namespace {

std::vector<int> plan_priority(const FermatTower& t) {
  std::vector<int> pr;
  for (auto& st : t.plan) pr.push_back(st.variable);
  return pr;
}

} // namespace

std::int64_t chi_tower(const FermatTower& t, ChiMemo* memo) {
  FermatSystem s = system_of(t);
  EulerEngine e(memo, plan_priority(t));
  return e.closed(s, s.full_mask());
}

std::int64_t chi_on_closed_stratum(const FermatTower& t, const std::vector<int>& support, ChiMemo* memo) {
  FermatTower r = t.restricted(support);
  for (std::size_t e = 0; e < r.equations.size(); ++e)
    if (r.equations[e].empty())
      throw std::domain_error("equation " + std::to_string(e + 1) + " vanishes identically on the stratum");
  FermatSystem s = system_of(r);
  EulerEngine e(memo, plan_priority(t));
  return e.closed(s, mask_of(support));
}

} // namespace spinfold
