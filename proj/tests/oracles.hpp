// Independent reference computations for tests. Nothing here calls into the
// library's arithmetic; every routine is a plain brute-force or textbook
// version on machine integers.
#ifndef KAUCTION_TESTS_ORACLES_HPP_
#define KAUCTION_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t square_multiply(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Every subset sum of `codes`, mapped to the (first found) 0/1 vector.
inline std::map<std::uint64_t, std::vector<int>> subset_sums(const std::vector<std::uint64_t>& codes) {
  std::map<std::uint64_t, std::vector<int>> sums;
  const std::size_t k = codes.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t s = 0;
    std::vector<int> bits(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        s += codes[i];
        bits[i] = 1;
      }
    }
    sums.emplace(s, bits);
  }
  return sums;
}

// Indicator of the chosen (1-based) price indices.
inline std::vector<int> indicator(const std::vector<std::size_t>& choices, std::size_t k) {
  std::vector<int> bits(k, 0);
  for (auto c : choices) bits.at(c - 1) = 1;
  return bits;
}

inline std::size_t max_choice(const std::vector<std::size_t>& choices) {
  std::size_t m = 0;
  for (auto c : choices) m = c > m ? c : m;
  return m;
}

inline bool distinct(const std::vector<std::size_t>& choices) {
  return std::set<std::size_t>(choices.begin(), choices.end()).size() == choices.size();
}

}  // namespace oracle

#endif  // KAUCTION_TESTS_ORACLES_HPP_
