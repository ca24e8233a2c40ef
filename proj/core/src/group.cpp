#include "kauction/group.hpp"

#include <algorithm>
#include <array>

#include "kauction/errors.hpp"

namespace kauction {

namespace {

constexpr int kMillerRabinRounds = 40;
constexpr int kPrimeCandidates = 4096;
constexpr int kCofactorCandidates = 4096;
constexpr int kGeneratorAttempts = 1024;

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

BigInt mod_floor(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) != 0;
}

void GroupParams::validate() const {
  if (!is_probable_prime(q)) throw ParameterError("group: q is not prime");
  if (!is_probable_prime(p)) throw ParameterError("group: p is not prime");
  if (mu < 1 || p != mu * q + 1) throw ParameterError("group: p != mu*q + 1");
  const std::array<std::pair<const char*, const GroupElement*>, 4> gens{
      {{"g_s", &g_s}, {"g_b", &g_b}, {"g_ot", &g_ot}, {"h_ot", &h_ot}}};
  for (const auto& [name, g] : gens) {
    if (g->value == 1 || !is_member(*g)) {
      throw ParameterError(std::string("group: ") + name + " is not an order-q generator");
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (*gens[i].second == *gens[j].second) {
        throw ParameterError(std::string("group: ") + gens[i].first + " equals " + gens[j].first);
      }
    }
  }
}

bool GroupParams::is_member(const GroupElement& x) const {
  if (x.value < 1 || x.value >= p) return false;
  return powm(x.value, q, p) == 1;
}

Scalar GroupParams::scalar(const BigInt& x) const { return Scalar(mod_floor(x, q)); }

Scalar GroupParams::checked_scalar(const BigInt& x) const {
  if (!is_scalar(x)) throw ParameterError("scalar out of range [0, q)");
  return Scalar(x);
}

GroupElement GroupParams::checked_element(const BigInt& x) const {
  GroupElement e(x);
  if (!is_member(e)) throw ParameterError("value is not in the order-q subgroup");
  return e;
}

std::size_t GroupParams::scalar_bytes() const {
  return (mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8;
}

std::size_t GroupParams::element_bytes() const {
  return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
}

GroupElement pow_mod(const GroupParams& params, const GroupElement& base, const Scalar& exp) {
  return GroupElement(powm(base.value, exp.value, params.p));
}

GroupElement mul_mod(const GroupParams& params, const GroupElement& a, const GroupElement& b) {
  return GroupElement(mod_floor(a.value * b.value, params.p));
}

GroupElement inv_mod(const GroupParams& params, const GroupElement& a) {
  BigInt r;
  if (mod_floor(a.value, params.p) == 0 ||
      mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), params.p.get_mpz_t()) == 0) {
    throw DomainError("inv_mod: element has no inverse");
  }
  return GroupElement(r);
}

Scalar add_mod(const GroupParams& params, const Scalar& a, const Scalar& b) {
  return params.scalar(a.value + b.value);
}

Scalar sub_mod(const GroupParams& params, const Scalar& a, const Scalar& b) {
  return params.scalar(a.value - b.value);
}

Scalar mul_mod(const GroupParams& params, const Scalar& a, const Scalar& b) {
  return params.scalar(a.value * b.value);
}

Scalar neg_mod(const GroupParams& params, const Scalar& a) { return params.scalar(-a.value); }

GroupElement find_subgroup_generator(const BigInt& p, const BigInt& q, const BigInt& mu, Rng& rng) {
  for (int attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    BigInt h = rng.uniform_below(p - 2) + 2;  // [2, p-1]
    BigInt g = powm(h, mu, p);
    if (g != 1 && powm(g, q, p) == 1) return GroupElement(g);
  }
  throw GenerationFailure("find_subgroup_generator: no generator found");
}

GroupElement hash_to_subgroup(const BigInt& p, const BigInt& q, const BigInt& mu,
                              std::string_view label) {
  std::size_t width = (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8 + 16;
  for (std::uint32_t counter = 0; counter < static_cast<std::uint32_t>(kGeneratorAttempts);
       ++counter) {
    Bytes wide;
    for (std::uint32_t block = 0; wide.size() < width; ++block) {
      std::array<std::uint8_t, 8> ctr{
          static_cast<std::uint8_t>(counter >> 24), static_cast<std::uint8_t>(counter >> 16),
          static_cast<std::uint8_t>(counter >> 8),  static_cast<std::uint8_t>(counter),
          static_cast<std::uint8_t>(block >> 24),   static_cast<std::uint8_t>(block >> 16),
          static_cast<std::uint8_t>(block >> 8),    static_cast<std::uint8_t>(block)};
      auto digest = sha256({as_bytes("kauction/hash-to-subgroup"), as_bytes(label), ctr});
      wide.insert(wide.end(), digest.begin(), digest.end());
    }
    wide.resize(width);
    BigInt h = mod_floor(from_bytes(wide), p);
    if (h < 2) continue;
    BigInt g = powm(h, mu, p);
    if (g != 1 && powm(g, q, p) == 1) return GroupElement(g);
  }
  throw GenerationFailure("hash_to_subgroup: no element found");
}

namespace {

void derive_generators(GroupParams& params, Rng& rng) {
  params.g_s = find_subgroup_generator(params.p, params.q, params.mu, rng);
  do {
    params.g_b = find_subgroup_generator(params.p, params.q, params.mu, rng);
  } while (params.g_b == params.g_s);
  params.g_ot = hash_to_subgroup(params.p, params.q, params.mu, "kauction/ot/g");
  params.h_ot = hash_to_subgroup(params.p, params.q, params.mu, "kauction/ot/h");
}

}  // namespace

GroupParams generate_group_params(unsigned q_bits, std::string_view seed) {
  if (q_bits < 8) throw ParameterError("generate_group_params: q_bits must be at least 8");
  Rng rng(seed);
  for (int attempt = 0; attempt < kPrimeCandidates; ++attempt) {
    BigInt q = rng.exact_bits(q_bits);
    if (q % 2 == 0) q += 1;
    while (mpz_sizeinbase(q.get_mpz_t(), 2) == q_bits && !is_probable_prime(q)) q += 2;
    if (mpz_sizeinbase(q.get_mpz_t(), 2) != q_bits) continue;

    for (long mu = 2; mu <= 2 * kCofactorCandidates; mu += 2) {
      BigInt p = q * mu + 1;
      if (!is_probable_prime(p)) continue;
      GroupParams params;
      params.p = p;
      params.q = q;
      params.mu = mu;
      derive_generators(params, rng);
      try {
        params.validate();
      } catch (const ParameterError&) {
        // Tiny groups can collide two generators; try the next candidate.
        break;
      }
      return params;
    }
  }
  throw GenerationFailure("generate_group_params: attempt budget exhausted");
}

GroupParams toy_group_params() {
  GroupParams params;
  params.p = 4507;
  params.q = 751;
  params.mu = 6;
  params.g_s = GroupElement(powm(2, params.mu, params.p));
  params.g_b = GroupElement(powm(3, params.mu, params.p));
  params.g_ot = hash_to_subgroup(params.p, params.q, params.mu, "kauction/ot/g");
  params.h_ot = hash_to_subgroup(params.p, params.q, params.mu, "kauction/ot/h");
  params.validate();
  return params;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt from_decimal(std::string_view s) {
  if (s.empty() || s.size() > 4096) throw MalformedMessage("expected a decimal integer");
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw MalformedMessage("expected a decimal integer, got '" + std::string(s) + "'");
  }
  if (s.size() > 1 && s[0] == '0') {
    throw MalformedMessage("decimal integer has a leading zero: '" + std::string(s) + "'");
  }
  return BigInt(std::string(s), 10);
}

Bytes to_fixed_bytes(const BigInt& x, std::size_t width) {
  if (x < 0) throw ParameterError("to_fixed_bytes: negative value");
  std::size_t needed = x == 0 ? 0 : (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
  if (needed > width) throw ParameterError("to_fixed_bytes: value does not fit");
  Bytes out(width, 0);
  if (needed > 0) {
    std::size_t count = 0;
    mpz_export(out.data() + (width - needed), &count, 1, 1, 1, 0, x.get_mpz_t());
  }
  return out;
}

BigInt from_bytes(std::span<const std::uint8_t> bytes) {
  BigInt v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw MalformedMessage("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw MalformedMessage("invalid lowercase hex digit");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace kauction
