#include "kauction/harness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kauction/errors.hpp"

namespace kauction {

// ---------------------------------------------------------------- transcript

std::string record_to_line(const TranscriptRecord& record) {
  Json j = Json::object();
  j["seq"] = std::to_string(record.seq);
  j["phase"] = std::string(to_string(record.message.phase));
  j["channel"] = std::string(to_string(record.message.channel));
  j["from"] = record.message.from;
  j["to"] = record.message.to;
  j["kind"] = record.message.kind;
  j["body"] = record.message.body;
  return j.dump();
}

std::string to_jsonl(const Transcript& transcript) {
  std::string out;
  for (const auto& r : transcript) {
    out += record_to_line(r);
    out += '\n';
  }
  return out;
}

TranscriptRecord parse_record(std::string_view line, std::size_t line_no) {
  std::string where = "line " + std::to_string(line_no);
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw MalformedMessage(where + ": " + e.what());
  }
  if (!j.is_object()) throw MalformedMessage(where + ": record is not an object");
  if (j.contains("seq") && j["seq"].is_string()) {
    try {
      where = "seq " + to_decimal(from_decimal(j["seq"].get<std::string>()));
    } catch (const MalformedMessage&) {
    }
  }
  static const std::vector<std::string> keys{"seq", "phase", "channel", "from", "to", "kind", "body"};
  if (j.size() != keys.size()) throw MalformedMessage(where + ": record must have exactly 7 fields");
  try {
    TranscriptRecord r;
    BigInt seq = read_int(j, "seq");
    if (!seq.fits_ulong_p()) throw MalformedMessage("seq out of range");
    r.seq = seq.get_ui();
    r.message.phase = phase_from_string(read_string(j, "phase"));
    r.message.channel = channel_from_string(read_string(j, "channel"));
    r.message.from = read_string(j, "from");
    r.message.to = read_string(j, "to");
    r.message.kind = read_string(j, "kind");
    r.message.body = field(j, "body");
    if (!r.message.body.is_object()) throw MalformedMessage("body must be an object");
    return r;
  } catch (const MalformedMessage& e) {
    throw MalformedMessage(where + ": " + e.what());
  }
}

Transcript parse_transcript(std::string_view text) {
  Transcript out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    bool terminated = end != std::string_view::npos;
    if (!terminated) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) {
      if (terminated && start >= text.size()) break;
      throw MalformedMessage("line " + std::to_string(line_no) + ": empty line");
    }
    if (!terminated) {
      // Every record ends with a newline; a missing one means the file was cut.
      std::string after = out.empty() ? "" : " after seq " + std::to_string(out.back().seq);
      throw MalformedMessage("line " + std::to_string(line_no) + after + ": truncated record");
    }
    out.push_back(parse_record(line, line_no));
  }
  return out;
}

// ---------------------------------------------------------------- adversary

bool RuleMatch::matches(const Message& msg) const {
  return (!phase || *phase == msg.phase) && (!from || *from == msg.from) && (!to || *to == msg.to) &&
         (!kind || *kind == msg.kind);
}

std::string_view to_string(RuleAction a) {
  switch (a) {
    case RuleAction::kMutate:
      return "mutate";
    case RuleAction::kDropMessage:
      return "drop_message";
    case RuleAction::kDropParticipant:
      return "drop_participant";
    case RuleAction::kReplacePayload:
      return "replace_payload";
  }
  return "?";
}

RuleAction rule_action_from_string(std::string_view s) {
  for (auto a : {RuleAction::kMutate, RuleAction::kDropMessage, RuleAction::kDropParticipant,
                 RuleAction::kReplacePayload}) {
    if (to_string(a) == s) return a;
  }
  throw ConfigError("unknown adversary action '" + std::string(s) + "'");
}

namespace {

bool valid_role(const RoleId& role, std::size_t n) {
  if (role == kSeller) return true;
  auto j = bidder_index(role);
  return j && *j <= n;
}

}  // namespace

void AdversaryScript::validate(const AuctionConfig& config) const {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const AdversaryRule& rule = rules[i];
    std::string where = "adversary rule " + std::to_string(i + 1) + ": ";
    const KindSpec* spec = nullptr;
    if (rule.match.kind) {
      spec = find_kind(*rule.match.kind);
      if (!spec) throw ConfigError(where + "unknown message kind '" + *rule.match.kind + "'");
    }
    if (rule.match.from && !valid_role(*rule.match.from, config.n)) {
      throw ConfigError(where + "unknown sender '" + *rule.match.from + "'");
    }
    if (rule.participant && !valid_role(*rule.participant, config.n)) {
      throw ConfigError(where + "unknown participant '" + *rule.participant + "'");
    }
    if (rule.action == RuleAction::kMutate) {
      if (!spec) throw ConfigError(where + "mutate needs a message kind to check the path against");
      Json::json_pointer ptr;
      try {
        ptr = Json::json_pointer(rule.path);
      } catch (const Json::exception& e) {
        throw ConfigError(where + "bad path '" + rule.path + "': " + e.what());
      }
      if (ptr.empty()) throw ConfigError(where + "mutate path must name a field");
      std::string top = rule.path.substr(1, rule.path.find('/', 1) - 1);
      if (std::find(spec->fields.begin(), spec->fields.end(), top) == spec->fields.end()) {
        throw ConfigError(where + "'" + std::string(spec->name) + "' has no field '" + top + "'");
      }
    }
    if (rule.action == RuleAction::kReplacePayload) {
      if (!rule.value.is_object()) throw ConfigError(where + "replacement payload must be an object");
      if (spec) {
        for (const auto& [key, unused] : rule.value.items()) {
          if (std::find(spec->fields.begin(), spec->fields.end(), key) == spec->fields.end()) {
            throw ConfigError(where + "'" + std::string(spec->name) + "' has no field '" + key + "'");
          }
        }
      }
    }
  }
  for (const auto& [j, fault] : bidder_faults) {
    if (j < 1 || j > config.n) throw ConfigError("corrupt bidder index out of range");
  }
  if (seller_fault && seller_fault->swap_ot_slots) {
    auto [a, b] = *seller_fault->swap_ot_slots;
    if (a < 1 || b < 1 || a > config.k() || b > config.k()) {
      throw ConfigError("swap_ot_slots names a slot outside the price list");
    }
  }
  if (seller_fault && seller_fault->extra_flag &&
      (*seller_fault->extra_flag < 1 || *seller_fault->extra_flag > config.k())) {
    throw ConfigError("extra_flag names a price outside the list");
  }
  for (const auto& d : dropouts) {
    auto j = bidder_index(d.bidder);
    if (!j || *j > config.n) throw ConfigError("dropout names unknown bidder '" + d.bidder + "'");
    if (d.before == Phase::kCommit && config.mode == Mode::kHonest) {
      throw ConfigError("honest mode has no commit phase to drop out before");
    }
  }
}

// ---------------------------------------------------------------- bus

Bus::Bus(std::size_t n, AdversaryScript script)
    : n_(n),
      script_(std::move(script)),
      fired_(script_.rules.size(), false),
      dropout_fired_(script_.dropouts.size(), false) {}

void Bus::begin_phase(Phase phase) {
  for (std::size_t i = 0; i < script_.dropouts.size(); ++i) {
    if (!dropout_fired_[i] && script_.dropouts[i].before == phase) {
      dropout_fired_[i] = true;
      halt(script_.dropouts[i].bidder);
    }
  }
}

std::vector<Delivery> Bus::send(const Message& original) {
  if (halted(original.from)) return {};
  if (original.channel == Channel::kBidderOnly && original.from == kSeller) {
    throw std::logic_error("the seller cannot send on the bidder-only channel");
  }
  Message msg = original;
  for (std::size_t i = 0; i < script_.rules.size(); ++i) {
    const AdversaryRule& rule = script_.rules[i];
    if ((fired_[i] && !rule.repeat) || !rule.match.matches(msg)) continue;
    fired_[i] = true;
    switch (rule.action) {
      case RuleAction::kDropMessage:
        return {};
      case RuleAction::kDropParticipant: {
        RoleId target = rule.participant.value_or(msg.from);
        halt(target);
        if (target == msg.from) return {};
        break;
      }
      case RuleAction::kMutate:
        msg.body[Json::json_pointer(rule.path)] = rule.value;
        break;
      case RuleAction::kReplacePayload:
        msg.body = rule.value;
        break;
    }
  }
  transcript_.push_back({transcript_.size() + 1, msg});

  std::vector<Delivery> out;
  switch (msg.channel) {
    case Channel::kPrivate:
      if (reachable(msg.to)) out.push_back({msg.to, msg});
      break;
    case Channel::kPublic:
      if (reachable(kSeller)) out.push_back({kSeller, msg});
      [[fallthrough]];
    case Channel::kBidderOnly:
      for (std::size_t j = 1; j <= n_; ++j) {
        if (reachable(bidder_id(j))) out.push_back({bidder_id(j), msg});
      }
      break;
  }
  return out;
}

Participants make_participants(const AuctionConfig& config, const AdversaryScript& script) {
  Participants parties;
  if (script.seller_fault) {
    parties.seller = std::make_unique<CorruptSeller>(config, *script.seller_fault);
  } else {
    parties.seller = std::make_unique<Seller>(config);
  }
  for (std::size_t j = 1; j <= config.n; ++j) {
    auto fault = script.bidder_faults.find(j);
    if (fault != script.bidder_faults.end()) {
      parties.bidders.push_back(std::make_unique<CorruptBidder>(config, j, fault->second));
    } else {
      parties.bidders.push_back(std::make_unique<Bidder>(config, j));
    }
  }
  return parties;
}

RunResult run_auction(const AuctionConfig& config, const BidPlan& bids, const AdversaryScript& script) {
  config.validate();
  script.validate(config);
  Bus bus(config.n, script);
  AuctionEngine engine(config, make_participants(config, script), bus);
  Outcome outcome = engine.run(bids);
  return {std::move(outcome), bus.transcript()};
}

// ---------------------------------------------------------------- verifier

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names{
      "sequence",          "payload",           "channel-discipline", "phase-order",
      "ot-acceptance",     "zeta-membership",   "code-adjust",        "share-commitments",
      "share-acceptance",  "sigma-commitments", "claim",              "proof2",
  };
  return names;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult& VerificationReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

namespace {

bool phase_step_allowed(Phase from, Phase to) {
  if (from == to) return true;
  using P = Phase;
  static const std::set<std::pair<P, P>> allowed{
      {P::kInit, P::kOt},        {P::kOt, P::kCommit},      {P::kOt, P::kSharing},
      {P::kCommit, P::kOt},      {P::kCommit, P::kSharing}, {P::kSharing, P::kSolve},
      {P::kSolve, P::kSharing},  {P::kSolve, P::kClaim},    {P::kClaim, P::kProof},
  };
  return allowed.count({from, to}) != 0;
}

std::map<std::size_t, GroupElement> bidder_map(const GroupParams& params, const Json& body,
                                               std::string_view name) {
  const Json& obj = field(body, name);
  if (!obj.is_object()) throw MalformedMessage("field '" + std::string(name) + "' must be an object");
  std::map<std::size_t, GroupElement> out;
  for (const auto& [key, value] : obj.items()) {
    auto j = bidder_index(key);
    if (!j) throw MalformedMessage("non-bidder key in '" + std::string(name) + "'");
    Json wrapper = Json::object();
    wrapper["v"] = value;
    out[*j] = read_element(params, wrapper, "v");
  }
  return out;
}

class Verifier {
 public:
  explicit Verifier(const AuctionConfig& config) : config_(config), params_(config.params) {
    for (const auto& name : verification_checks()) report_.checks.push_back({name, {}});
    for (std::size_t j = 1; j <= config.n; ++j) active_.insert(j);
  }

  VerificationReport run(const Transcript& transcript) {
    std::optional<std::uint64_t> last_seq;
    std::optional<Phase> last_phase;
    for (const auto& record : transcript) {
      seq_ = record.seq;
      if (last_seq && record.seq <= *last_seq) fail("sequence", "seq does not increase");
      if (!last_seq && record.seq != 1) fail("sequence", "transcript must start at seq 1");
      last_seq = record.seq;

      const Message& msg = record.message;
      const KindSpec* spec = check_channel(msg);
      if (spec && spec->phase && *spec->phase != msg.phase) {
        fail("phase-order", msg.kind + " tagged with phase " + std::string(to_string(msg.phase)));
      }
      if (last_phase && !phase_step_allowed(*last_phase, msg.phase)) {
        fail("phase-order", "phase " + std::string(to_string(*last_phase)) + " followed by " +
                                std::string(to_string(msg.phase)));
      }
      last_phase = msg.phase;
      if (!spec) continue;
      try {
        replay(msg);
      } catch (const AuctionError& e) {
        fail("payload", msg.kind + ": " + e.what());
      }
    }
    return report_;
  }

 private:
  void fail(std::string_view check, std::string detail) { fail_at(seq_, check, std::move(detail)); }

  void fail_at(std::uint64_t seq, std::string_view check, std::string detail) {
    for (auto& c : report_.checks) {
      if (c.name == check) {
        c.failures.push_back({seq, std::move(detail)});
        return;
      }
    }
  }

  bool malicious() const { return config_.mode == Mode::kMalicious; }

  bool is_bidder(const RoleId& id) const {
    auto j = bidder_index(id);
    return j && *j <= config_.n;
  }

  const KindSpec* check_channel(const Message& msg) {
    const KindSpec* spec = find_kind(msg.kind);
    if (!spec) {
      fail("channel-discipline", "unknown kind '" + msg.kind + "'");
      return nullptr;
    }
    if (msg.channel != spec->channel) {
      fail("channel-discipline", msg.kind + " must travel on the " +
                                     std::string(to_string(spec->channel)) + " channel");
    }
    bool sender_ok = spec->sender == SenderClass::kSeller ? msg.from == kSeller : is_bidder(msg.from);
    if (!sender_ok) fail("channel-discipline", msg.kind + " sent by '" + msg.from + "'");
    bool receiver_ok = false;
    switch (msg.channel) {
      case Channel::kPublic:
        receiver_ok = msg.to == kEveryone;
        break;
      case Channel::kBidderOnly:
        receiver_ok = msg.to == kAllBidders;
        break;
      case Channel::kPrivate:
        receiver_ok = msg.to != msg.from && (spec->receiver == ReceiverClass::kSeller
                                                 ? msg.to == kSeller
                                                 : is_bidder(msg.to));
        break;
    }
    if (msg.to == kSeller && msg.channel != Channel::kPrivate) receiver_ok = false;
    if (!receiver_ok) fail("channel-discipline", msg.kind + " addressed to '" + msg.to + "'");
    if (msg.body.is_object()) {
      for (const auto& [key, unused] : msg.body.items()) {
        if (std::find(spec->fields.begin(), spec->fields.end(), key) == spec->fields.end()) {
          fail("channel-discipline", msg.kind + " carries unexpected field '" + key + "'");
        }
      }
    }
    return spec;
  }

  std::size_t position(std::size_t v) const {
    auto it = active_.find(v);
    if (it == active_.end()) throw MalformedMessage(bidder_id(v) + " is not an active bidder");
    return static_cast<std::size_t>(std::distance(active_.begin(), it));
  }

  void fold(std::map<std::size_t, GroupElement>& view, std::size_t from, std::size_t into) {
    auto a = view.find(from);
    auto b = view.find(into);
    if (a != view.end() && b != view.end()) b->second = mul_mod(params_, b->second, a->second);
  }

  void replay(const Message& msg) {
    const std::string& k = msg.kind;
    auto sender = bidder_index(msg.from);
    if (find_kind(k)->sender == SenderClass::kBidder && (!sender || *sender > config_.n)) return;

    if (k == kind::kAnnounce) {
      if (!malicious()) return;
      eta_ = read_elements(params_, msg.body, "eta");
      if (eta_.size() != config_.k()) throw MalformedMessage("announce carries the wrong number of eta");
      xi_ = bidder_map(params_, msg.body, "xi");
    } else if (k == kind::kOtAck) {
      if (read_string(msg.body, "verdict") != "ACC") {
        fail("ot-acceptance", msg.from + " rejected the code it received from S");
      }
    } else if (k == kind::kCodeCommits) {
      shuffled_ = read_elements(params_, msg.body, "shuffled");
      for (auto& [v, e] : bidder_map(params_, msg.body, "rand")) rand_[v] = e;
      for (auto& [v, e] : bidder_map(params_, msg.body, "neg_rand")) neg_rand_[v] = e;
    } else if (k == kind::kRerandomize) {
      for (auto& [v, e] : bidder_map(params_, msg.body, "xi")) xi_[v] = e;
      for (auto& [v, e] : bidder_map(params_, msg.body, "rand")) rand_[v] = e;
      for (auto& [v, e] : bidder_map(params_, msg.body, "neg_rand")) neg_rand_[v] = e;
      for (const auto& id : read_strings(msg.body, "bidders")) {
        if (auto v = bidder_index(id)) zeta_.erase(*v);
      }
    } else if (k == kind::kDropout) {
      auto j = bidder_index(read_string(msg.body, "bidder"));
      if (!j) throw MalformedMessage("dropout names a non-bidder");
      drop_stage_from_string(read_string(msg.body, "stage"));
      active_.erase(*j);
      zeta_.erase(*j);
      share_commits_.clear();
      sigma_commits_.clear();
      if (auto m = bidder_index(read_string(msg.body, "absorbed_by"))) {
        fold(xi_, *j, *m);
        fold(rand_, *j, *m);
        fold(neg_rand_, *j, *m);
      }
    } else if (k == kind::kCodeAdjust) {
      if (!malicious()) return;
      auto dropped = bidder_index(read_string(msg.body, "dropped"));
      Scalar delta = read_scalar(params_, msg.body, "delta");
      auto xi = dropped ? xi_.find(*dropped) : xi_.end();
      if (xi == xi_.end() || commit(params_, params_.g_s, delta) != xi->second) {
        fail("code-adjust", "adjustment for " + msg.to + " does not match the dropped randomizer");
      }
    } else if (k == kind::kZeta) {
      zeta_[*sender] = read_element(params_, msg.body, "zeta");
      zeta_seq_[*sender] = seq_;
    } else if (k == kind::kZetaCheck) {
      if (!malicious()) return;
      for (std::size_t v : active_) {
        auto z = zeta_.find(v);
        auto neg = neg_rand_.find(v);
        bool ok = z != zeta_.end() && neg != neg_rand_.end() &&
                  verify_zeta_membership(params_, z->second, neg->second, shuffled_);
        BigInt key = z == zeta_.end() ? BigInt(0) : z->second.value;
        if (!ok && reported_zeta_.insert({v, key}).second) {
          fail_at(z == zeta_.end() ? seq_ : zeta_seq_[v], "zeta-membership",
                  bidder_id(v) + "'s code commitment is not one of the seller's codes");
        }
      }
    } else if (k == kind::kShareCommits) {
      auto commits = read_elements(params_, msg.body, "commits");
      share_commits_[*sender] = commits;
      if (!malicious()) return;
      auto z = zeta_.find(*sender);
      if (commits.size() != active_.size() || z == zeta_.end() ||
          !verify_row(params_, commits, z->second, active_.size())) {
        fail("share-commitments", msg.from + "'s share commitments do not multiply to its zeta");
      }
    } else if (k == kind::kShare) {
      Scalar d = read_scalar(params_, msg.body, "d");
      if (!malicious()) return;
      auto row = share_commits_.find(*sender);
      auto to = bidder_index(msg.to);
      if (row == share_commits_.end() || !to || row->second.size() != active_.size() ||
          !verify_share(params_, d, row->second.at(position(*to)))) {
        fail("share-commitments", "share " + msg.from + " -> " + msg.to + " does not match its commitment");
      }
    } else if (k == kind::kShareAck) {
      if (read_string(msg.body, "verdict") != "ACC") {
        fail("share-acceptance", msg.from + " rejected the share from " + read_string(msg.body, "sender"));
      }
    } else if (k == kind::kSigmaCommit) {
      GroupElement c = read_element(params_, msg.body, "commit");
      sigma_commits_[*sender] = c;
      std::vector<GroupElement> column;
      std::size_t pos = position(*sender);
      for (std::size_t u : active_) {
        auto row = share_commits_.find(u);
        if (row == share_commits_.end() || row->second.size() != active_.size()) return;
        column.push_back(row->second[pos]);
      }
      if (product(params_, column) != c) {
        fail("sigma-commitments", msg.from + "'s sigma commitment is not its column product");
      }
    } else if (k == kind::kSigma) {
      Scalar s = read_scalar(params_, msg.body, "sigma");
      if (!malicious()) return;
      auto c = sigma_commits_.find(*sender);
      if (c == sigma_commits_.end() || commit(params_, params_.g_b, s) != c->second) {
        fail("sigma-commitments", msg.from + "'s sigma does not match its commitment");
      }
    } else if (k == kind::kResult) {
      std::vector<int> bits;
      for (const auto& b : read_strings(msg.body, "flags")) {
        if (b != "0" && b != "1") throw MalformedMessage("flags must be \"0\" or \"1\"");
        bits.push_back(b == "1");
      }
      if (bits.size() != config_.k()) throw MalformedMessage("result must carry one flag per price");
      flags_ = FlagVector(bits);
    } else if (k == kind::kClaim) {
      claims_[*sender] = read_scalar(params_, msg.body, "code");
    } else if (k == kind::kClaimVerdict) {
      if (!malicious() || !flags_) return;
      auto j = bidder_index(read_string(msg.body, "bidder"));
      bool accepted = read_string(msg.body, "verdict") == "ACC";
      if (!j || !claims_.count(*j)) return;
      std::optional<std::size_t> top;
      for (std::size_t i = 0; i < flags_->size(); ++i) {
        if (flags_->test(i)) top = i;
      }
      auto xi = xi_.find(*j);
      bool valid = top && xi != xi_.end() &&
                   verify_received_code(params_, eta_.at(*top), xi->second, claims_[*j]);
      if (valid != accepted) {
        fail("claim", "verdict on " + bidder_id(*j) + "'s claim contradicts the commitments");
      }
    } else if (k == kind::kProofCommit) {
      proof_a_ = read_element(params_, msg.body, "a");
      proof_b_ = read_element(params_, msg.body, "b");
    } else if (k == kind::kProofChallenge) {
      challenge_ = read_scalar(params_, msg.body, "omega");
    } else if (k == kind::kProofResponse) {
      Scalar r = read_scalar(params_, msg.body, "r");
      if (!proof_a_ || !proof_b_ || !challenge_ || !flags_) {
        fail("proof2", "response without a preceding commitment and challenge");
        return;
      }
      std::vector<GroupElement> sigma_commits;
      for (std::size_t v : active_) {
        auto it = sigma_commits_.find(v);
        sigma_commits.push_back(it == sigma_commits_.end() ? GroupElement(0) : it->second);
      }
      EqdlStatement st = proof2_statement(params_, eta_, sigma_commits, *flags_);
      if (!eqdl_verify(params_, st, {*proof_a_, *proof_b_, *challenge_, r})) {
        fail("proof2", "the announced flags do not match the committed sigmas");
      }
    }
  }

  const AuctionConfig& config_;
  const GroupParams& params_;
  VerificationReport report_;
  std::uint64_t seq_ = 0;

  std::set<std::size_t> active_;
  std::vector<GroupElement> eta_;
  std::map<std::size_t, GroupElement> xi_;
  std::vector<GroupElement> shuffled_;
  std::map<std::size_t, GroupElement> rand_;
  std::map<std::size_t, GroupElement> neg_rand_;
  std::map<std::size_t, GroupElement> zeta_;
  std::map<std::size_t, std::uint64_t> zeta_seq_;
  std::set<std::pair<std::size_t, BigInt>> reported_zeta_;
  std::map<std::size_t, std::vector<GroupElement>> share_commits_;
  std::map<std::size_t, GroupElement> sigma_commits_;
  std::optional<FlagVector> flags_;
  std::map<std::size_t, Scalar> claims_;
  std::optional<GroupElement> proof_a_;
  std::optional<GroupElement> proof_b_;
  std::optional<Scalar> challenge_;
};

}  // namespace

VerificationReport verify_transcript(const Transcript& transcript, const AuctionConfig& config) {
  config.params.validate();
  return Verifier(config).run(transcript);
}

}  // namespace kauction
