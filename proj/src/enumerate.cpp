#include "spinfold/shell.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace spinfold {

std::string Candidate::str() const {
  std::ostringstream os;
  os << weights.str() << " d=" << degree;
  if (records.empty()) os << " smooth";
  else os << " isolated points=" << isolated_points;
  for (auto& r : records) os << "\n    " << r.str();
  return os.str();
}

namespace {

void tuples(int d, int slots, int min, std::vector<int>& cur, int full, std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int a = min; a * slots <= d; ++a) {
    if (full % a) continue;
    cur.push_back(a);
    tuples(d - a, slots - 1, a, cur, full, out);
    cur.pop_back();
  }
}

bool has_pairs(const std::vector<int>& w) {
  std::map<int, int> mult;
  for (int a : w) ++mult[a];
  int pairs = 0;
  for (auto& [a, m] : mult) pairs += m / 2;
  return pairs >= 2;
}

bool keep(const Candidate& c, const EnumFilters& f) {
  auto all = [&](SingularityClass cls) {
    return !c.records.empty() && std::all_of(c.records.begin(), c.records.end(), [&](auto& r) {
      return r.intersection_dimension == 0 && r.cls == cls;
    });
  };
  if (f.smooth && !c.records.empty()) return false;
  if (f.z4_only && !all(SingularityClass::Z4_SCALAR)) return false;
  if (f.z2_only && !all(SingularityClass::Z2_NEG)) return false;
  if (f.pairs && !has_pairs(c.weights.weights)) return false;
  return true;
}

} // namespace

std::vector<Candidate> enumerate_candidates(int max_degree, const EnumFilters& f, int cap, int threads) {
  if (max_degree > cap)
    throw std::invalid_argument("degree bound " + std::to_string(max_degree) + " exceeds the cap " + std::to_string(cap));
  std::vector<std::vector<int>> ws;
  for (int d = 6; d <= max_degree; ++d) {
    std::vector<int> cur;
    std::vector<std::vector<int>> found;
    tuples(d, 6, 1, cur, d, found);
    for (auto& w : found)
      if (hcf(w) == 1) ws.push_back(w);
  }
  std::vector<std::optional<Candidate>> slots(ws.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < ws.size();) {
      Candidate c;
      c.weights = WeightSystem(ws[i]);
      c.degree = c.weights.sum();
      c.records = singular_locus(fermat_hypersurface(c.weights));
      for (auto& r : c.records)
        if (r.intersection_dimension == 0 && r.point_count) c.isolated_points += *r.point_count;
      if (keep(c, f)) slots[i] = std::move(c);
    }
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (int t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work));
  for (auto& j : jobs) j.get();
  std::vector<Candidate> out;
  for (auto& c : slots)
    if (c) out.push_back(std::move(*c));
  return out;
}

} // namespace spinfold
