#include "kauction/knapsack.hpp"

#include <algorithm>

#include "kauction/errors.hpp"

namespace kauction {

PriceTable::PriceTable(std::vector<Money> prices) : prices_(std::move(prices)) {
  if (prices_.empty()) throw ParameterError("price table is empty");
  if (prices_.front() == 0) throw ParameterError("prices must be positive");
  for (std::size_t i = 1; i < prices_.size(); ++i) {
    if (prices_[i] <= prices_[i - 1]) throw ParameterError("prices must be strictly ascending");
  }
}

Money PriceTable::at(std::size_t index) const {
  if (index < 1 || index > prices_.size()) throw ParameterError("price index out of range");
  return prices_[index - 1];
}

FlagVector::FlagVector(std::vector<int> bits) {
  flags_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw ParameterError("flag entries must be 0 or 1");
    flags_.push_back(static_cast<std::uint8_t>(b));
  }
}

std::size_t FlagVector::count() const {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), 1));
}

bool is_super_increasing(const std::vector<BigInt>& codes) {
  BigInt running = 0;
  for (const auto& c : codes) {
    if (c <= running) return false;
    running += c;
  }
  return true;
}

CodeBook::CodeBook(std::vector<BigInt> codes, BigInt q) : codes_(std::move(codes)), q_(std::move(q)) {
  if (codes_.empty()) throw ParameterError("code book is empty");
  BigInt total = 0;
  for (const auto& c : codes_) {
    if (c < 1 || c >= q_) throw ParameterError("code outside [1, q)");
    total += c;
  }
  if (!is_super_increasing(codes_)) throw ParameterError("codes are not super-increasing");
  if (total >= q_) throw ParameterError("sum of codes must be below q");
}

CodeBook generate_codes(std::size_t k, const BigInt& q, Rng& rng) {
  if (k == 0) throw ParameterError("generate_codes: k must be positive");
  BigInt growth = 1;
  for (std::size_t i = 1; i < k; ++i) growth *= 3;
  BigInt first_bound = (q - 1) / growth;
  if (first_bound < 1) throw ParameterError("generate_codes: q too small for k codes");

  std::vector<BigInt> codes;
  codes.reserve(k);
  BigInt running = rng.uniform_below(first_bound) + 1;
  codes.push_back(running);
  for (std::size_t i = 1; i < k; ++i) {
    BigInt delta = rng.uniform_below(running) + 1;
    codes.push_back(running + delta);
    running += codes.back();
  }
  return CodeBook(std::move(codes), q);
}

Scalar encode(const CodeBook& book, const FlagVector& flags) {
  if (flags.size() != book.size()) throw ParameterError("encode: length mismatch");
  BigInt sum = 0;
  for (std::size_t i = 0; i < book.size(); ++i) {
    if (flags.test(i)) sum += book.code(i);
  }
  return Scalar(sum);
}

FlagVector solve(const CodeBook& book, const Scalar& sigma) {
  if (sigma.value < 0 || sigma.value >= book.modulus()) {
    throw ParameterError("solve: sigma outside [0, q)");
  }
  FlagVector flags(book.size());
  BigInt residual = sigma.value;
  for (std::size_t i = book.size(); i-- > 0;) {
    if (residual >= book.code(i)) {
      flags.set(i, true);
      residual -= book.code(i);
    }
  }
  if (residual != 0) {
    throw UnsolvableKnapsack("knapsack value " + to_decimal(sigma.value) +
                             " leaves residual " + to_decimal(residual));
  }
  return flags;
}

WinningPrices winning_prices(const FlagVector& flags, const PriceTable& table) {
  if (flags.size() != table.size()) throw ParameterError("winning_prices: length mismatch");
  WinningPrices out;
  bool found = false;
  for (std::size_t i = flags.size(); i-- > 0;) {
    if (!flags.test(i)) continue;
    if (!found) {
      out.highest = table.at(i + 1);
      out.highest_index = i + 1;
      found = true;
    } else {
      out.second = table.at(i + 1);
      out.second_index = i + 1;
      break;
    }
  }
  if (!found) throw NoBids("no flag set");
  return out;
}

}  // namespace kauction
