#ifndef KAUCTION_HARNESS_HPP_
#define KAUCTION_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kauction/engine.hpp"

namespace kauction {

struct TranscriptRecord {
  std::uint64_t seq = 0;
  Message message;

  friend bool operator==(const TranscriptRecord&, const TranscriptRecord&) = default;
};

using Transcript = std::vector<TranscriptRecord>;

// One record per line: seq, phase, channel, from, to, kind, body. Integers
// are decimal strings, octet strings lowercase hex.
std::string record_to_line(const TranscriptRecord& record);
std::string to_jsonl(const Transcript& transcript);
// Throws MalformedMessage naming the seq (or the line, when the seq itself
// is unreadable).
TranscriptRecord parse_record(std::string_view line, std::size_t line_no);
Transcript parse_transcript(std::string_view text);

struct RuleMatch {
  std::optional<Phase> phase;
  std::optional<RoleId> from;
  std::optional<RoleId> to;
  std::optional<std::string> kind;

  bool matches(const Message& msg) const;
};

enum class RuleAction { kMutate, kDropMessage, kDropParticipant, kReplacePayload };

std::string_view to_string(RuleAction a);
RuleAction rule_action_from_string(std::string_view s);

struct AdversaryRule {
  RuleMatch match;
  RuleAction action = RuleAction::kDropMessage;
  std::string path;                  // JSON pointer into the body, for mutate
  Json value;                        // new field value, or the whole body
  std::optional<RoleId> participant; // drop-participant target; default sender
  bool repeat = false;
};

// Halts a bidder when the named phase begins.
struct ScheduledDropout {
  RoleId bidder;
  Phase before = Phase::kOt;
};

struct AdversaryScript {
  std::vector<AdversaryRule> rules;
  std::optional<SellerFault> seller_fault;
  std::map<std::size_t, BidderFault> bidder_faults;
  std::vector<ScheduledDropout> dropouts;

  bool empty() const {
    return rules.empty() && !seller_fault && bidder_faults.empty() && dropouts.empty();
  }
  // Throws ConfigError on a rule that names an unknown kind, a field the
  // kind does not carry, or a role outside the roster.
  void validate(const AuctionConfig& config) const;
};

// In-process message bus. Applies the adversary script to each message,
// records what survives, and fans it out by channel.
class Bus : public Network {
 public:
  Bus(std::size_t n, AdversaryScript script);

  std::vector<Delivery> send(const Message& msg) override;
  bool halted(const RoleId& role) const override { return halted_.count(role) != 0; }
  void remove(const RoleId& role) override { removed_.insert(role); }
  void begin_phase(Phase phase) override;

  void halt(const RoleId& role) { halted_.insert(role); }
  const Transcript& transcript() const { return transcript_; }

 private:
  bool reachable(const RoleId& role) const { return !halted(role) && !removed_.count(role); }

  std::size_t n_;
  AdversaryScript script_;
  std::vector<bool> fired_;
  std::vector<bool> dropout_fired_;
  std::set<RoleId> halted_;
  std::set<RoleId> removed_;
  Transcript transcript_;
};

Participants make_participants(const AuctionConfig& config, const AdversaryScript& script);

struct RunResult {
  Outcome outcome;
  Transcript transcript;
};

// Throws ParameterError / ConfigError when config, bids and script do not
// fit together.
RunResult run_auction(const AuctionConfig& config, const BidPlan& bids,
                      const AdversaryScript& script = {});

struct CheckFailure {
  std::uint64_t seq = 0;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult& check(std::string_view name) const;
};

// Names of the checks, in report order.
const std::vector<std::string>& verification_checks();

// Replays every check an outside observer can run on the transcript:
// sequencing, channel and phase discipline, and in malicious mode the
// commitment equations and proof verification.
VerificationReport verify_transcript(const Transcript& transcript, const AuctionConfig& config);

}  // namespace kauction

#endif  // KAUCTION_HARNESS_HPP_
