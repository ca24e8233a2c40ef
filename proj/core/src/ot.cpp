#include "kauction/ot.hpp"

#include "kauction/errors.hpp"

namespace kauction {

namespace {

std::array<std::uint8_t, 8> be64(std::uint64_t v) {
  std::array<std::uint8_t, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
  return out;
}

GroupElement h_pow_index(const GroupParams& params, std::size_t index) {
  return pow_mod(params, params.h_ot, params.scalar(BigInt(static_cast<unsigned long>(index))));
}

}  // namespace

Bytes ot_kdf(const GroupParams& params, const GroupElement& key, std::size_t index,
             std::size_t length) {
  Bytes encoded = to_fixed_bytes(key.value, params.element_bytes());
  auto idx = be64(index);
  Bytes out;
  out.reserve(length + 32);
  for (std::uint64_t block = 0; out.size() < length; ++block) {
    auto digest = sha256({as_bytes("kauction/ot/pad"), encoded, idx, be64(block)});
    out.insert(out.end(), digest.begin(), digest.end());
  }
  out.resize(length);
  return out;
}

std::pair<OtRequest, OtReceiverState> ot_request_with_blinding(std::size_t choice, std::size_t k,
                                                               const GroupParams& params,
                                                               const Scalar& a) {
  if (choice < 1 || choice > k) throw ParameterError("ot_request: choice outside [1, k]");
  if (a.value == 0 || !params.is_scalar(a.value)) {
    throw ParameterError("ot_request: blinding exponent must be in [1, q)");
  }
  GroupElement y = mul_mod(params, pow_mod(params, params.g_ot, a), h_pow_index(params, choice));
  return {OtRequest{y}, OtReceiverState{a, choice}};
}

std::pair<OtRequest, OtReceiverState> ot_request(std::size_t choice, std::size_t k,
                                                 const GroupParams& params, Rng& rng) {
  return ot_request_with_blinding(choice, k, params, Scalar(rng.uniform_nonzero_below(params.q)));
}

OtResponse ot_respond(const std::vector<Bytes>& messages, const OtRequest& request,
                      const GroupParams& params, Rng& rng) {
  if (messages.empty()) throw ParameterError("ot_respond: no messages");
  const std::size_t length = messages.front().size();
  for (const auto& m : messages) {
    if (m.size() != length) throw ParameterError("ot_respond: messages differ in length");
  }
  if (!params.is_member(request.y)) throw ParameterError("ot_respond: request outside subgroup");

  OtResponse response;
  response.pairs.reserve(messages.size());
  for (std::size_t i = 1; i <= messages.size(); ++i) {
    Scalar s(rng.uniform_nonzero_below(params.q));
    GroupElement u = pow_mod(params, params.g_ot, s);
    GroupElement base = mul_mod(params, request.y, inv_mod(params, h_pow_index(params, i)));
    Bytes pad = ot_kdf(params, pow_mod(params, base, s), i, length);
    Bytes v = messages[i - 1];
    for (std::size_t b = 0; b < length; ++b) v[b] ^= pad[b];
    response.pairs.push_back(OtPair{u, std::move(v)});
  }
  return response;
}

Bytes ot_recover(const OtResponse& response, const OtReceiverState& state,
                 const GroupParams& params) {
  if (state.choice < 1 || state.choice > response.pairs.size()) {
    throw ParameterError("ot_recover: chosen slot missing from response");
  }
  const OtPair& pair = response.pairs[state.choice - 1];
  Bytes pad = ot_kdf(params, pow_mod(params, pair.u, state.a), state.choice, pair.v.size());
  Bytes out = pair.v;
  for (std::size_t b = 0; b < out.size(); ++b) out[b] ^= pad[b];
  return out;
}

}  // namespace kauction
