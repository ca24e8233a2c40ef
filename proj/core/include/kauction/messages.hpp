#ifndef KAUCTION_MESSAGES_HPP_
#define KAUCTION_MESSAGES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kauction/group.hpp"

namespace kauction {

using Json = nlohmann::ordered_json;
using RoleId = std::string;

inline const RoleId kSeller = "S";
inline const RoleId kEveryone = "*";
inline const RoleId kAllBidders = "bidders";

// "B1".."Bn"; j is 1-based.
RoleId bidder_id(std::size_t j);
// Index of a bidder id, nullopt for anything else.
std::optional<std::size_t> bidder_index(std::string_view id);

enum class Channel {
  kPrivate,     // point to point
  kPublic,      // seller and every bidder
  kBidderOnly,  // every bidder, never the seller
};

enum class Phase { kInit, kOt, kCommit, kSharing, kSolve, kClaim, kProof };

std::string_view to_string(Channel c);
std::string_view to_string(Phase p);
// Both throw MalformedMessage on unknown names.
Channel channel_from_string(std::string_view s);
Phase phase_from_string(std::string_view s);

// Message kinds. Each has a fixed channel, a fixed sender class, and a
// fixed set of body fields; most also have a fixed phase.
namespace kind {
inline constexpr std::string_view kAnnounce = "announce";
inline constexpr std::string_view kOtRequest = "ot_request";
inline constexpr std::string_view kOtResponse = "ot_response";
inline constexpr std::string_view kOtAck = "ot_ack";
inline constexpr std::string_view kZeta = "zeta";
inline constexpr std::string_view kCodeCommits = "code_commits";
inline constexpr std::string_view kZetaCheck = "zeta_check";
inline constexpr std::string_view kRerandomize = "rerandomize";
inline constexpr std::string_view kDropout = "dropout";
inline constexpr std::string_view kCodeAdjust = "code_adjust";
inline constexpr std::string_view kShareCommits = "share_commits";
inline constexpr std::string_view kShare = "share";
inline constexpr std::string_view kShareAck = "share_ack";
inline constexpr std::string_view kSigmaCommit = "sigma_commit";
inline constexpr std::string_view kSigmaAudit = "sigma_audit";
inline constexpr std::string_view kSigma = "sigma";
inline constexpr std::string_view kSigmaReject = "sigma_reject";
inline constexpr std::string_view kResult = "result";
inline constexpr std::string_view kClaim = "claim";
inline constexpr std::string_view kClaimVerdict = "claim_verdict";
inline constexpr std::string_view kProofCommit = "proof_commit";
inline constexpr std::string_view kProofChallenge = "proof_challenge";
inline constexpr std::string_view kProofResponse = "proof_response";
inline constexpr std::string_view kProofVerdict = "proof_verdict";
}  // namespace kind

enum class SenderClass { kSeller, kBidder };
enum class ReceiverClass { kSeller, kBidder, kBroadcast };

struct KindSpec {
  std::string_view name;
  Channel channel;
  SenderClass sender;
  ReceiverClass receiver;
  std::optional<Phase> phase;  // nullopt: tagged with the phase in progress
  std::vector<std::string_view> fields;
};

// nullptr for unknown kinds.
const KindSpec* find_kind(std::string_view name);
const std::vector<KindSpec>& all_kinds();

struct Message {
  Phase phase = Phase::kInit;
  Channel channel = Channel::kPublic;
  RoleId from;
  RoleId to;
  std::string kind;
  Json body = Json::object();

  friend bool operator==(const Message&, const Message&) = default;
};

// Builds a message of a registered kind, filling channel, phase and the
// broadcast address from the kind table. `to` is only used for private
// kinds.
Message make_message(std::string_view kind_name, const RoleId& from, const RoleId& to, Json body,
                     Phase current);

// Body field codecs. Readers throw MalformedMessage on missing fields or
// wrong shapes; element readers also reject non-members of the subgroup.
Json encode_int(const BigInt& x);
Json encode_elements(const std::vector<GroupElement>& xs);
Json encode_scalars(const std::vector<Scalar>& xs);

const Json& field(const Json& body, std::string_view name);
BigInt read_int(const Json& body, std::string_view name);
Scalar read_scalar(const GroupParams& params, const Json& body, std::string_view name);
GroupElement read_element(const GroupParams& params, const Json& body, std::string_view name);
std::vector<GroupElement> read_elements(const GroupParams& params, const Json& body,
                                        std::string_view name);
std::vector<BigInt> read_ints(const Json& body, std::string_view name);
std::string read_string(const Json& body, std::string_view name);
std::vector<std::string> read_strings(const Json& body, std::string_view name);

}  // namespace kauction

#endif  // KAUCTION_MESSAGES_HPP_
