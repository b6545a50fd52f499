#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace fpt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Thrown on malformed or inadmissible input (maps to exit code 2).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive search exceeds its budget (maps to exit code 3).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  long long max_nodes = 50'000'000;  // backtracking nodes or enumeration steps
  int jobs = 1;
};

// Deterministic 64-bit generator (splitmix64). Used wherever reproducible
// pseudorandom corpora are needed; independent of platform libstdc++.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

// FNV-1a 64-bit, used for input fingerprints in reports.
inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

inline Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace fpt
