#ifndef KAUCTION_OT_HPP_
#define KAUCTION_OT_HPP_

#include <vector>

#include "kauction/group.hpp"

namespace kauction {

// 1-out-of-k oblivious transfer of equal-length octet strings over the
// two-generator discrete-log construction:
//
//   receiver:  y   = g_ot^a * h_ot^choice
//   sender:    u_i = g_ot^s_i
//              v_i = m_i XOR KDF((y * h_ot^-i)^s_i, i)
//   receiver:  m   = v_choice XOR KDF(u_choice^a, choice)
//
// Slot indices are 1-based throughout.

struct OtRequest {
  GroupElement y;
};

// Single-use; belongs to the receiver session that built the request.
struct OtReceiverState {
  Scalar a;
  std::size_t choice = 0;
};

struct OtPair {
  GroupElement u;
  Bytes v;
};

struct OtResponse {
  std::vector<OtPair> pairs;
};

// Pad for slot `index`: SHA-256 over (label, element, index) in counter
// mode, truncated to `length` octets.
Bytes ot_kdf(const GroupParams& params, const GroupElement& key, std::size_t index,
             std::size_t length);

// Throws ParameterError unless 1 <= choice <= k.
std::pair<OtRequest, OtReceiverState> ot_request(std::size_t choice, std::size_t k,
                                                 const GroupParams& params, Rng& rng);
// Same with a caller-supplied blinding exponent (must be non-zero).
std::pair<OtRequest, OtReceiverState> ot_request_with_blinding(std::size_t choice, std::size_t k,
                                                               const GroupParams& params,
                                                               const Scalar& a);

// Throws ParameterError when messages are empty or of unequal length, or
// when the request is not a subgroup element.
OtResponse ot_respond(const std::vector<Bytes>& messages, const OtRequest& request,
                      const GroupParams& params, Rng& rng);

// Garbage in, garbage out: a mismatched state yields an unrelated string.
// Throws ParameterError only if the chosen slot does not exist.
Bytes ot_recover(const OtResponse& response, const OtReceiverState& state,
                 const GroupParams& params);

}  // namespace kauction

#endif  // KAUCTION_OT_HPP_
