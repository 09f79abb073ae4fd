#include "flatkit/flats.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace flatkit {

namespace {

// One enumeration level: closures of F + e for every flat F of the previous
// level and e in `within` outside F.
std::unordered_set<std::uint64_t> expand_level(
    const Matroid& m, ElementSet within,
    const std::vector<std::uint64_t>& level, int jobs) {
  std::unordered_set<std::uint64_t> next;
  auto expand_range = [&](std::size_t lo, std::size_t hi,
                          std::vector<std::uint64_t>& out) {
    for (std::size_t i = lo; i < hi; ++i) {
      ElementSet flat(level[i]);
      for (int e : within.minus(flat).elements())
        out.push_back(m.closure_within(flat.with(e), within).bits());
    }
  };
  if (jobs <= 1 || level.size() < 8) {
    std::vector<std::uint64_t> out;
    expand_range(0, level.size(), out);
    next.insert(out.begin(), out.end());
    return next;
  }
  const int workers = std::min<int>(jobs, static_cast<int>(level.size()));
  std::vector<std::vector<std::uint64_t>> results(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (level.size() + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(level.size(), lo + chunk);
    threads.emplace_back([&, lo, hi, w] { expand_range(lo, hi, results[w]); });
  }
  for (auto& t : threads) t.join();
  for (const auto& out : results) next.insert(out.begin(), out.end());
  return next;
}

std::vector<std::uint64_t> sorted_level(const std::unordered_set<std::uint64_t>& s) {
  std::vector<std::uint64_t> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return canonical_less(ElementSet(a), ElementSet(b));
  });
  return out;
}

std::vector<Flat> to_flats(const std::vector<std::uint64_t>& level, int rank) {
  std::vector<Flat> out;
  out.reserve(level.size());
  for (auto bits : level) out.push_back({ElementSet(bits), rank});
  return out;
}

}  // namespace

std::vector<Flat> flats_of_rank_within(const Matroid& m, ElementSet within, int k,
                                       int jobs) {
  const int rmax = m.rank(within);
  if (k < 0 || k > rmax)
    throw std::invalid_argument("flat rank out of range 0..r");
  std::vector<std::uint64_t> level{m.closure_within(ElementSet(), within).bits()};
  for (int r = 1; r <= k; ++r)
    level = sorted_level(expand_level(m, within, level, jobs));
  return to_flats(level, k);
}

std::vector<Flat> flats_of_rank(const Matroid& m, int k, int jobs) {
  return flats_of_rank_within(m, m.all(), k, jobs);
}

std::vector<Flat> all_flats(const Matroid& m, int jobs) {
  const ElementSet within = m.all();
  const int rmax = m.rank();
  std::vector<Flat> out;
  std::vector<std::uint64_t> level{m.closure_within(ElementSet(), within).bits()};
  auto append = [&](int r) {
    auto flats = to_flats(level, r);
    out.insert(out.end(), flats.begin(), flats.end());
  };
  append(0);
  for (int r = 1; r <= rmax; ++r) {
    level = sorted_level(expand_level(m, within, level, jobs));
    append(r);
  }
  return out;
}

FlatStats flat_size_stats(const Matroid& m, int k, int jobs) {
  auto flats = flats_of_rank(m, k, jobs);
  if (flats.empty()) throw std::invalid_argument("no flats of the requested rank");
  FlatStats stats;
  stats.rank = k;
  stats.count = flats.size();
  for (const auto& f : flats) stats.total_size += f.elements.size();
  stats.average = Rational(stats.total_size, stats.count);
  return stats;
}

}  // namespace flatkit
