#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace tfim {

// Failure categories; they map one-to-one onto the C API status codes
// (validation = 1, numerical = 2, missing input = 3).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Child seed for stream `stream` of a master seed. Streams derived this way
// never share generator state, so parallel execution stays reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 1));
}

// Uniform double in [0, 1) from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Runs body(0..count-1), chunked over at most max_threads threads. Each index
// owns its output slot, so the result does not depend on the thread count.
void parallel_for(std::size_t count, int max_threads,
                  const std::function<void(std::size_t)>& body);

// Round-trip ("%.17g") and fixed-point decimal formatting, locale-independent.
std::string format_full(double value);
std::string format_fixed(double value, int decimals);

}  // namespace tfim
