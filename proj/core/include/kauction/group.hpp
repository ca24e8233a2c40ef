#ifndef KAUCTION_GROUP_HPP_
#define KAUCTION_GROUP_HPP_

#include <compare>
#include <string>
#include <string_view>

#include "kauction/random.hpp"

namespace kauction {

// Exponent in [0, q).
struct Scalar {
  BigInt value;

  Scalar() = default;
  explicit Scalar(BigInt v) : value(std::move(v)) {}
  explicit Scalar(long v) : value(v) {}

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value == b.value; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value, b.value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// Member of the order-q subgroup of Z_p^*.
struct GroupElement {
  BigInt value{1};

  GroupElement() = default;
  explicit GroupElement(BigInt v) : value(std::move(v)) {}
  explicit GroupElement(long v) : value(v) {}

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.value == b.value;
  }
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    int c = cmp(a.value, b.value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// p = mu*q + 1 with p, q prime, plus the four generators of the order-q
// subgroup. g_ot and h_ot come from hashing fixed labels, so nobody knows
// the discrete log between them.
struct GroupParams {
  BigInt p;
  BigInt q;
  BigInt mu;
  GroupElement g_s;   // seller commitments
  GroupElement g_b;   // bidder commitments
  GroupElement g_ot;  // oblivious transfer
  GroupElement h_ot;

  // Throws ParameterError naming the first violated invariant.
  void validate() const;

  bool is_member(const GroupElement& x) const;
  bool is_scalar(const BigInt& x) const { return x >= 0 && x < q; }

  // Reduces any integer into [0, q).
  Scalar scalar(const BigInt& x) const;
  // Checked construction: throws if x is not in [0, q).
  Scalar checked_scalar(const BigInt& x) const;
  // Checked construction: throws if x is not a subgroup member.
  GroupElement checked_element(const BigInt& x) const;

  // Octets needed for an encoded scalar: ceil(bits(q) / 8).
  std::size_t scalar_bytes() const;
  // Octets needed for an encoded group element: ceil(bits(p) / 8).
  std::size_t element_bytes() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

bool is_probable_prime(const BigInt& n);

// Modular arithmetic in the subgroup.
GroupElement pow_mod(const GroupParams& params, const GroupElement& base, const Scalar& exp);
GroupElement mul_mod(const GroupParams& params, const GroupElement& a, const GroupElement& b);
// Throws DomainError on zero.
GroupElement inv_mod(const GroupParams& params, const GroupElement& a);

// Scalar arithmetic mod q.
Scalar add_mod(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar sub_mod(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar mul_mod(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar neg_mod(const GroupParams& params, const Scalar& a);

// h^mu for random h in [2, p-1], retried until the result is not 1.
GroupElement find_subgroup_generator(const BigInt& p, const BigInt& q, const BigInt& mu, Rng& rng);

// Maps `label` onto a subgroup element other than 1 by hashing, so the
// discrete log of the result relative to any other generator is unknown.
GroupElement hash_to_subgroup(const BigInt& p, const BigInt& q, const BigInt& mu,
                              std::string_view label);

// Random q of exactly q_bits bits, smallest even mu making mu*q+1 prime,
// then the four generators. Deterministic for a fixed seed. Throws
// ParameterError for q_bits < 8 and GenerationFailure when the attempt
// budget runs out.
GroupParams generate_group_params(unsigned q_bits, std::string_view seed);

// q = 751, mu = 6, p = 4507 with fixed generators (g_s = 2^6, g_b = 3^6).
GroupParams toy_group_params();

// Decimal serialization used by parameter files and transcripts.
std::string to_decimal(const BigInt& x);
// Throws MalformedMessage unless `s` is a plain non-negative decimal integer.
BigInt from_decimal(std::string_view s);

// Big-endian, left-padded to `width` octets. Throws ParameterError if x
// does not fit.
Bytes to_fixed_bytes(const BigInt& x, std::size_t width);
BigInt from_bytes(std::span<const std::uint8_t> bytes);

std::string to_hex(std::span<const std::uint8_t> bytes);
// Throws MalformedMessage on odd length or non-lowercase-hex characters.
Bytes from_hex(std::string_view hex);

}  // namespace kauction

#endif  // KAUCTION_GROUP_HPP_
