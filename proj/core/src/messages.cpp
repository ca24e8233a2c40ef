#include "kauction/messages.hpp"

#include <array>
#include <charconv>

#include "kauction/errors.hpp"

namespace kauction {

RoleId bidder_id(std::size_t j) { return "B" + std::to_string(j); }

std::optional<std::size_t> bidder_index(std::string_view id) {
  if (id.size() < 2 || id[0] != 'B' || id[1] == '0') return std::nullopt;
  std::size_t j = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), j);
  if (ec != std::errc() || ptr != id.data() + id.size() || j == 0) return std::nullopt;
  return j;
}

namespace {

constexpr std::array<std::pair<Channel, std::string_view>, 3> kChannelNames{{
    {Channel::kPrivate, "private"},
    {Channel::kPublic, "public"},
    {Channel::kBidderOnly, "bidder-only"},
}};

constexpr std::array<std::pair<Phase, std::string_view>, 7> kPhaseNames{{
    {Phase::kInit, "init"},
    {Phase::kOt, "ot"},
    {Phase::kCommit, "commit"},
    {Phase::kSharing, "sharing"},
    {Phase::kSolve, "solve"},
    {Phase::kClaim, "claim"},
    {Phase::kProof, "proof"},
}};

std::vector<KindSpec> build_kinds() {
  using C = Channel;
  using S = SenderClass;
  using R = ReceiverClass;
  using P = Phase;
  return {
      {kind::kAnnounce, C::kPublic, S::kSeller, R::kBroadcast, P::kInit,
       {"mode", "n", "prices", "eta", "xi"}},
      {kind::kOtRequest, C::kPrivate, S::kBidder, R::kSeller, P::kOt, {"y"}},
      {kind::kOtResponse, C::kPrivate, S::kSeller, R::kBidder, P::kOt, {"u", "v"}},
      {kind::kOtAck, C::kPublic, S::kBidder, R::kBroadcast, P::kOt, {"verdict"}},
      {kind::kZeta, C::kBidderOnly, S::kBidder, R::kBroadcast, std::nullopt, {"zeta"}},
      {kind::kCodeCommits, C::kPublic, S::kSeller, R::kBroadcast, P::kCommit,
       {"shuffled", "rand", "neg_rand"}},
      {kind::kZetaCheck, C::kPublic, S::kBidder, R::kBroadcast, std::nullopt, {"invalid", "ties"}},
      {kind::kRerandomize, C::kPublic, S::kSeller, R::kBroadcast, P::kCommit,
       {"round", "bidders", "xi", "rand", "neg_rand"}},
      {kind::kDropout, C::kPublic, S::kSeller, R::kBroadcast, std::nullopt,
       {"bidder", "absorbed_by", "stage", "reason"}},
      {kind::kCodeAdjust, C::kPrivate, S::kSeller, R::kBidder, std::nullopt, {"dropped", "delta"}},
      {kind::kShareCommits, C::kBidderOnly, S::kBidder, R::kBroadcast, P::kSharing, {"commits"}},
      {kind::kShare, C::kPrivate, S::kBidder, R::kBidder, P::kSharing, {"d"}},
      {kind::kShareAck, C::kPublic, S::kBidder, R::kBroadcast, P::kSharing, {"sender", "verdict"}},
      {kind::kSigmaCommit, C::kPublic, S::kBidder, R::kBroadcast, P::kSharing, {"commit"}},
      {kind::kSigmaAudit, C::kPublic, S::kBidder, R::kBroadcast, P::kSharing, {"invalid"}},
      {kind::kSigma, C::kPrivate, S::kBidder, R::kSeller, P::kSharing, {"sigma"}},
      {kind::kSigmaReject, C::kPublic, S::kSeller, R::kBroadcast, P::kSolve, {"bidder"}},
      {kind::kResult, C::kPublic, S::kSeller, R::kBroadcast, P::kSolve, {"flags"}},
      {kind::kClaim, C::kPrivate, S::kBidder, R::kSeller, P::kClaim, {"code"}},
      {kind::kClaimVerdict, C::kPublic, S::kSeller, R::kBroadcast, P::kClaim,
       {"bidder", "verdict"}},
      {kind::kProofCommit, C::kPrivate, S::kSeller, R::kBidder, P::kProof, {"a", "b"}},
      {kind::kProofChallenge, C::kPrivate, S::kBidder, R::kSeller, P::kProof, {"omega"}},
      {kind::kProofResponse, C::kPrivate, S::kSeller, R::kBidder, P::kProof, {"r"}},
      {kind::kProofVerdict, C::kPublic, S::kBidder, R::kBroadcast, P::kProof, {"verdict"}},
  };
}

}  // namespace

std::string_view to_string(Channel c) {
  for (const auto& [value, name] : kChannelNames) {
    if (value == c) return name;
  }
  return "?";
}

std::string_view to_string(Phase p) {
  for (const auto& [value, name] : kPhaseNames) {
    if (value == p) return name;
  }
  return "?";
}

Channel channel_from_string(std::string_view s) {
  for (const auto& [value, name] : kChannelNames) {
    if (name == s) return value;
  }
  throw MalformedMessage("unknown channel '" + std::string(s) + "'");
}

Phase phase_from_string(std::string_view s) {
  for (const auto& [value, name] : kPhaseNames) {
    if (name == s) return value;
  }
  throw MalformedMessage("unknown phase '" + std::string(s) + "'");
}

const std::vector<KindSpec>& all_kinds() {
  static const std::vector<KindSpec> kinds = build_kinds();
  return kinds;
}

const KindSpec* find_kind(std::string_view name) {
  for (const auto& spec : all_kinds()) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

Message make_message(std::string_view kind_name, const RoleId& from, const RoleId& to, Json body,
                     Phase current) {
  const KindSpec* spec = find_kind(kind_name);
  if (spec == nullptr) throw MalformedMessage("unknown message kind '" + std::string(kind_name) + "'");
  Message msg;
  msg.phase = spec->phase.value_or(current);
  msg.channel = spec->channel;
  msg.from = from;
  msg.kind = std::string(kind_name);
  msg.body = std::move(body);
  switch (spec->channel) {
    case Channel::kPrivate:
      msg.to = to;
      break;
    case Channel::kPublic:
      msg.to = kEveryone;
      break;
    case Channel::kBidderOnly:
      msg.to = kAllBidders;
      break;
  }
  return msg;
}

Json encode_int(const BigInt& x) { return Json(to_decimal(x)); }

Json encode_elements(const std::vector<GroupElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x.value));
  return out;
}

Json encode_scalars(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x.value));
  return out;
}

const Json& field(const Json& body, std::string_view name) {
  if (!body.is_object()) throw MalformedMessage("message body is not an object");
  auto it = body.find(std::string(name));
  if (it == body.end()) throw MalformedMessage("missing field '" + std::string(name) + "'");
  return *it;
}

namespace {

BigInt as_int(const Json& value, std::string_view name) {
  if (!value.is_string()) {
    throw MalformedMessage("field '" + std::string(name) + "' must be a decimal string");
  }
  return from_decimal(value.get<std::string>());
}

}  // namespace

BigInt read_int(const Json& body, std::string_view name) { return as_int(field(body, name), name); }

Scalar read_scalar(const GroupParams& params, const Json& body, std::string_view name) {
  BigInt x = read_int(body, name);
  if (!params.is_scalar(x)) throw MalformedMessage("field '" + std::string(name) + "' not in [0, q)");
  return Scalar(x);
}

GroupElement read_element(const GroupParams& params, const Json& body, std::string_view name) {
  GroupElement e(read_int(body, name));
  if (!params.is_member(e)) {
    throw MalformedMessage("field '" + std::string(name) + "' is not a subgroup element");
  }
  return e;
}

std::vector<BigInt> read_ints(const Json& body, std::string_view name) {
  const Json& arr = field(body, name);
  if (!arr.is_array()) throw MalformedMessage("field '" + std::string(name) + "' must be an array");
  std::vector<BigInt> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(as_int(v, name));
  return out;
}

std::vector<GroupElement> read_elements(const GroupParams& params, const Json& body,
                                        std::string_view name) {
  std::vector<GroupElement> out;
  for (auto& x : read_ints(body, name)) {
    GroupElement e(std::move(x));
    if (!params.is_member(e)) {
      throw MalformedMessage("field '" + std::string(name) + "' holds a non-member");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string read_string(const Json& body, std::string_view name) {
  const Json& v = field(body, name);
  if (!v.is_string()) throw MalformedMessage("field '" + std::string(name) + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> read_strings(const Json& body, std::string_view name) {
  const Json& arr = field(body, name);
  if (!arr.is_array()) throw MalformedMessage("field '" + std::string(name) + "' must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw MalformedMessage("field '" + std::string(name) + "' holds a non-string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace kauction
