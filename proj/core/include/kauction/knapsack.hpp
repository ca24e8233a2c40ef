#ifndef KAUCTION_KNAPSACK_HPP_
#define KAUCTION_KNAPSACK_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "kauction/group.hpp"

namespace kauction {

using Money = std::uint64_t;

// Ascending list of the prices on offer, p_1 < ... < p_k.
class PriceTable {
 public:
  // Throws ParameterError unless prices are non-empty, positive and
  // strictly ascending.
  explicit PriceTable(std::vector<Money> prices);

  std::size_t size() const { return prices_.size(); }
  // 1-based, matching bid indices.
  Money at(std::size_t index) const;
  const std::vector<Money>& prices() const { return prices_; }

 private:
  std::vector<Money> prices_;
};

// One bit per price: f_i = 1 iff some bidder chose price i.
class FlagVector {
 public:
  FlagVector() = default;
  explicit FlagVector(std::size_t k) : flags_(k, 0) {}
  // Throws ParameterError on any entry other than 0 or 1.
  explicit FlagVector(std::vector<int> bits);

  std::size_t size() const { return flags_.size(); }
  bool test(std::size_t i) const { return flags_.at(i) != 0; }  // 0-based
  void set(std::size_t i, bool on) { flags_.at(i) = on ? 1 : 0; }
  std::size_t count() const;
  std::vector<int> bits() const { return {flags_.begin(), flags_.end()}; }

  friend bool operator==(const FlagVector&, const FlagVector&) = default;

 private:
  std::vector<std::uint8_t> flags_;
};

// Super-increasing secret codes c_1..c_k with sum below q.
class CodeBook {
 public:
  // Throws ParameterError unless every code is in [1, q), each code
  // exceeds the sum of all earlier ones, and the total stays below q.
  CodeBook(std::vector<BigInt> codes, BigInt q);

  std::size_t size() const { return codes_.size(); }
  const BigInt& code(std::size_t i) const { return codes_.at(i); }  // 0-based
  const std::vector<BigInt>& codes() const { return codes_; }
  const BigInt& modulus() const { return q_; }

  friend bool operator==(const CodeBook&, const CodeBook&) = default;

 private:
  std::vector<BigInt> codes_;
  BigInt q_;
};

bool is_super_increasing(const std::vector<BigInt>& codes);

// c_1 uniform in [1, (q-1)/3^(k-1)], then c_i = running sum + uniform delta
// in [1, running sum]. The bound on c_1 guarantees the total stays below q.
// Throws ParameterError when q is too small for k codes.
CodeBook generate_codes(std::size_t k, const BigInt& q, Rng& rng);

// sum of codes[i] * flags[i]; below q by the CodeBook invariant.
Scalar encode(const CodeBook& book, const FlagVector& flags);

// Greedy decode from the largest code down; f_i = 1 iff residual >= c_i.
// Throws UnsolvableKnapsack when the residual does not reach zero.
FlagVector solve(const CodeBook& book, const Scalar& sigma);

struct WinningPrices {
  Money highest = 0;
  std::optional<Money> second;
  std::size_t highest_index = 0;  // 1-based
  std::optional<std::size_t> second_index;
};

// Throws NoBids when no flag is set.
WinningPrices winning_prices(const FlagVector& flags, const PriceTable& table);

}  // namespace kauction

#endif  // KAUCTION_KNAPSACK_HPP_
