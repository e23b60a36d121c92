// Deterministic fork-join helpers: work is split into fixed chunks by
// index, results are merged in chunk order, so output never depends on
// scheduling or thread count.

#ifndef RELMON_PARALLEL_HPP_
#define RELMON_PARALLEL_HPP_

#include <cstddef>
#include <thread>
#include <vector>

namespace relmon {

// f(begin, end) runs on disjoint index ranges covering [0, count).
template <typename F>
void parallel_ranges(std::size_t count, int threads, F&& f) {
  if (threads < 1) threads = 1;
  std::size_t parts = static_cast<std::size_t>(threads);
  if (parts > count) parts = count == 0 ? 1 : count;
  if (parts <= 1) {
    f(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(parts);
  std::size_t chunk = (count + parts - 1) / parts;
  for (std::size_t p = 0; p < parts; ++p) {
    std::size_t begin = p * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&f, begin, end] { f(begin, end); });
  }
  for (auto& t : pool) t.join();
}

// Maps fn over [0, count) and returns results in index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int threads, Fn&& fn) {
  std::vector<T> out(count);
  parallel_ranges(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
  });
  return out;
}

}  // namespace relmon

#endif  // RELMON_PARALLEL_HPP_
