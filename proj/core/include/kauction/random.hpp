#ifndef KAUCTION_RANDOM_HPP_
#define KAUCTION_RANDOM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kauction {

using BigInt = mpz_class;
using Bytes = std::vector<std::uint8_t>;

// SHA-256 of the concatenation of `parts`.
std::array<std::uint8_t, 32> sha256(std::initializer_list<std::span<const std::uint8_t>> parts);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// Deterministic generator: SHA-256 in counter mode over a seed. Output is
// identical on every platform, which keeps transcripts replayable.
class Rng {
 public:
  explicit Rng(std::string_view seed);

  // Child generator whose stream depends on this seed and `label` only.
  Rng derive(std::string_view label) const;

  void fill(std::span<std::uint8_t> out);
  std::uint64_t next_u64();

  // Uniform in [0, bound). bound must be positive.
  BigInt uniform_below(const BigInt& bound);
  // Uniform in [1, bound).
  BigInt uniform_nonzero_below(const BigInt& bound);
  // Uniform in [0, bound) for small bounds.
  std::size_t index_below(std::size_t bound);
  // Uniform integer with exactly `bits` bits (top bit set).
  BigInt exact_bits(unsigned bits);

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = block_.size();
};

// In-place Fisher-Yates shuffle driven by `rng`.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.index_below(i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace kauction

#endif  // KAUCTION_RANDOM_HPP_
