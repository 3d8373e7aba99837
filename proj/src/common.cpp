#include "common.hpp"

#include <cstdio>
#include <thread>
#include <vector>

namespace tfim {

void parallel_for(std::size_t count, int max_threads,
                  const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  std::size_t n_threads = max_threads > 0 ? static_cast<std::size_t>(max_threads) : 1;
  if (n_threads > count) n_threads = count;
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += n_threads) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

}  // namespace tfim
