#include "kauction/random.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "kauction/errors.hpp"

namespace kauction {

std::array<std::uint8_t, 32> sha256(std::initializer_list<std::span<const std::uint8_t>> parts) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest init failed");
  }
  for (auto part : parts) {
    if (!part.empty() && EVP_DigestUpdate(ctx.get(), part.data(), part.size()) != 1) {
      throw std::runtime_error("sha256: digest update failed");
    }
  }
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
    throw std::runtime_error("sha256: digest final failed");
  }
  return out;
}

Rng::Rng(std::string_view seed) {
  key_ = sha256({as_bytes("kauction/rng/v1"), as_bytes(seed)});
}

Rng Rng::derive(std::string_view label) const {
  Rng child("");
  child.key_ = sha256({as_bytes("kauction/rng/derive"), key_, as_bytes(label)});
  return child;
}

void Rng::refill() {
  std::array<std::uint8_t, 8> ctr{};
  for (int i = 0; i < 8; ++i) ctr[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
  ++counter_;
  block_ = sha256({key_, ctr});
  used_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  for (auto& b : out) {
    if (used_ == block_.size()) refill();
    b = block_[used_++];
  }
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> buf{};
  fill(buf);
  std::uint64_t v = 0;
  for (auto b : buf) v = (v << 8) | b;
  return v;
}

BigInt Rng::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw ParameterError("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  BigInt top = bound - 1;
  std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  std::size_t nbytes = (bits + 7) / 8;
  Bytes buf(nbytes);
  std::uint8_t mask = static_cast<std::uint8_t>(0xFF >> (nbytes * 8 - bits));
  while (true) {
    fill(buf);
    buf[0] &= mask;
    BigInt v;
    mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
    if (v < bound) return v;
  }
}

BigInt Rng::uniform_nonzero_below(const BigInt& bound) {
  if (bound <= 1) throw ParameterError("uniform_nonzero_below: bound must exceed 1");
  return uniform_below(bound - 1) + 1;
}

std::size_t Rng::index_below(std::size_t bound) {
  if (bound == 0) throw ParameterError("index_below: bound must be positive");
  // Rejection sampling keeps the result unbiased.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  while (true) {
    std::uint64_t v = next_u64();
    if (v < limit) return static_cast<std::size_t>(v % bound);
  }
}

BigInt Rng::exact_bits(unsigned bits) {
  if (bits == 0) throw ParameterError("exact_bits: bits must be positive");
  BigInt base = 1;
  base <<= (bits - 1);
  return base + uniform_below(base);
}

}  // namespace kauction
