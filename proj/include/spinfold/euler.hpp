#pragma once

#include "spinfold/tower.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace spinfold {

/// Rows are linear in the pure powers z_v^{exponents[v]}.
struct FermatSystem {
  std::vector<int> weights;
  std::vector<int> exponents; // 0 when the variable is unused
  std::vector<std::map<int, Cyclotomic>> rows;

  unsigned full_mask() const { return (1u << weights.size()) - 1; }
};

FermatSystem fermat_system(const WeightSystem& w, const std::vector<int>& exponents);
/// generic pure-power terms are instantiated with distinct primes; generic blocks throw
FermatSystem system_of(const FermatTower& t);

/// Shared memo with get-or-compute semantics. Values are computed outside the lock;
/// a racing insert keeps the first value, which is identical by construction.
class ChiMemo {
public:
  template <class F>
  std::int64_t get_or_compute(const std::string& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    std::int64_t v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(key, v).first->second;
  }
  std::size_t size() const;
  void clear();

private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::int64_t> table_;
};

ChiMemo& shared_memo();

class EulerEngine {
public:
  /// memo == nullptr: no table is shared between recursive calls
  explicit EulerEngine(ChiMemo* memo = nullptr, std::vector<int> priority = {});

  /// chi of the variety intersected with the closed coordinate subspace CP(mask)
  std::int64_t closed(const FermatSystem& s, unsigned mask);
  /// chi of the variety intersected with the open stratum (all coordinates in mask nonzero)
  std::int64_t open(const FermatSystem& s, unsigned mask);
  std::uint64_t calls() const { return calls_; }

private:
  using Rows = std::vector<std::map<int, Cyclotomic>>;
  std::int64_t closed_rows(const FermatSystem& s, Rows rows, unsigned mask);
  std::int64_t compute(const FermatSystem& s, const Rows& rows, unsigned mask);
  int choose(unsigned mask) const;

  ChiMemo* memo_;
  std::vector<int> priority_;
  std::string prefix_;
  std::atomic<std::uint64_t> calls_{0};
};

/// Restrict rows to mask, drop empty rows, scale each row to leading coefficient 1, sort, dedupe.
std::vector<std::map<int, Cyclotomic>> normalize_rows(const std::vector<std::map<int, Cyclotomic>>& rows,
                                                      unsigned mask);

struct StratumChiTable {
  unsigned base = 0;
  std::map<unsigned, std::int64_t> closed;
  std::map<unsigned, std::int64_t> open;

  bool mobius_consistent() const;
};

StratumChiTable stratum_table(const FermatSystem& s, unsigned base, ChiMemo* memo = nullptr);

/// chain, if given, receives chi(Y_1), ..., chi(Y_m) on the prefixes z_0..z_j
std::int64_t chi_fermat(const WeightSystem& w, const std::vector<int>& exponents,
                        std::vector<std::int64_t>* chain = nullptr, ChiMemo* memo = nullptr);
/// k_j j + (1 - k_j) chi(Y_{j-1}) with no stratum correction
std::int64_t chi_fermat_uncorrected(const WeightSystem& w, const std::vector<int>& exponents);
/// true when l = hcf(a_i : i in I) divides a_j for every j and every nonempty I below j
bool correction_trivial(const WeightSystem& w);

std::int64_t chi_tower(const FermatTower& t, ChiMemo* memo = nullptr);
std::int64_t chi_on_closed_stratum(const FermatTower& t, const std::vector<int>& support, ChiMemo* memo = nullptr);

} // namespace spinfold
