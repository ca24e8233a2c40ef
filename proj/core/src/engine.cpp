#include "kauction/engine.hpp"

#include <algorithm>
#include <deque>

#include "kauction/errors.hpp"

namespace kauction {

std::string_view to_string(AbortReason r) {
  switch (r) {
    case AbortReason::kSellerRejected:
      return "seller-rejected";
    case AbortReason::kSellerHalted:
      return "seller-halted";
    case AbortReason::kTooFewBidders:
      return "too-few-bidders";
    case AbortReason::kTieUnresolved:
      return "tie-unresolved";
    case AbortReason::kUnsolvableKnapsack:
      return "unsolvable-knapsack";
    case AbortReason::kSigmaRejected:
      return "sigma-rejected";
    case AbortReason::kNoBids:
      return "no-bids";
    case AbortReason::kNoValidClaim:
      return "no-valid-claim";
    case AbortReason::kProof2Failed:
      return "proof2-failed";
  }
  return "?";
}

Participants honest_participants(const AuctionConfig& config) {
  Participants parties;
  parties.seller = std::make_unique<Seller>(config);
  for (std::size_t j = 1; j <= config.n; ++j) {
    parties.bidders.push_back(std::make_unique<Bidder>(config, j));
  }
  return parties;
}

AuctionEngine::AuctionEngine(const AuctionConfig& config, Participants parties, Network& network)
    : config_(config), parties_(std::move(parties)), net_(network) {
  if (!parties_.seller || parties_.bidders.size() != config_.n) {
    throw ParameterError("participants do not match the configured bidder count");
  }
  for (std::size_t j = 1; j <= config_.n; ++j) {
    if (!parties_.bidders[j - 1] || parties_.bidders[j - 1]->index() != j) {
      throw ParameterError("bidder " + std::to_string(j) + " is missing or out of place");
    }
    active_.insert(j);
  }
}

void AuctionEngine::stop(AbortReason reason, std::optional<RoleId> culprit, std::string detail) {
  throw Stop{AbortOutcome{reason, std::move(culprit), std::move(detail)}};
}

void AuctionEngine::enter(Phase phase) {
  phase_ = phase;
  parties_.seller->enter(phase);
  for (auto& b : parties_.bidders) b->enter(phase);
  net_.begin_phase(phase);
}

void AuctionEngine::incident(std::string check, RoleId culprit, RoleId reporter) {
  for (const auto& seen : outcome_.incidents) {
    if (seen.check == check && seen.culprit == culprit && seen.reporter == reporter) return;
  }
  outcome_.incidents.push_back({std::move(check), std::move(culprit), std::move(reporter), phase_});
}

void AuctionEngine::pump(std::vector<Message> initial) {
  std::deque<Message> queue(std::make_move_iterator(initial.begin()),
                            std::make_move_iterator(initial.end()));
  while (!queue.empty()) {
    Message msg = std::move(queue.front());
    queue.pop_front();
    auto deliveries = net_.send(msg);
    if (msg.channel == Channel::kPublic && !deliveries.empty()) {
      board_.push_back(deliveries.front().message);
    }
    for (const auto& d : deliveries) {
      std::vector<Message> replies;
      try {
        if (d.to == kSeller) {
          replies = parties_.seller->handle(d.message);
        } else if (auto j = bidder_index(d.to); j && *j <= config_.n) {
          replies = parties_.bidders[*j - 1]->handle(d.message);
        }
      } catch (const AuctionError&) {
        // The recipient drops what it cannot parse; the sender is on record.
        incident("malformed", msg.from, d.to);
      }
      for (auto& r : replies) queue.push_back(std::move(r));
    }
  }
}

std::vector<std::size_t> AuctionEngine::live_bidders() const {
  std::vector<std::size_t> out;
  for (std::size_t j : active_) {
    if (!net_.halted(bidder_id(j))) out.push_back(j);
  }
  return out;
}

DropStage AuctionEngine::stage_for(std::size_t j) const {
  if (sharing_started_) return DropStage::kAfterSharing;
  return parties_.seller->served(j) ? DropStage::kAfterOt : DropStage::kBeforeOt;
}

void AuctionEngine::drop(std::size_t j, std::string_view reason) {
  if (!active_.count(j)) return;
  DropStage stage = stage_for(j);
  active_.erase(j);
  outcome_.dropped.push_back(bidder_id(j));
  net_.remove(bidder_id(j));
  pump(parties_.seller->drop_bidder(j, stage, reason));
  if (active_.size() < 2) {
    stop(AbortReason::kTooFewBidders, std::nullopt,
         "only " + std::to_string(active_.size()) + " bidder left after " + bidder_id(j) + " dropped out");
  }
}

void AuctionEngine::checkpoint() {
  if (net_.halted(kSeller)) stop(AbortReason::kSellerHalted, kSeller, "the seller stopped responding");
  std::vector<std::size_t> current(active_.begin(), active_.end());
  for (std::size_t j : current) {
    if (net_.halted(bidder_id(j))) drop(j, "halted");
  }
}

void AuctionEngine::run_ot_phase(const std::vector<std::size_t>& bidders) {
  enter(Phase::kOt);
  std::size_t mark = board_.size();
  for (std::size_t j : bidders) {
    if (!active_.count(j) || net_.halted(bidder_id(j))) continue;
    pump({parties_.bidders[j - 1]->request_code()});
  }
  checkpoint();
  if (config_.mode == Mode::kMalicious) {
    bool rejected = false;
    for (std::size_t i = mark; i < board_.size(); ++i) {
      const Message& msg = board_[i];
      if (msg.kind == kind::kOtAck && msg.body.value("verdict", "") == "REJ") {
        incident("ot-code", kSeller, msg.from);
        rejected = true;
      }
    }
    if (rejected) {
      stop(AbortReason::kSellerRejected, kSeller, "a bidder's code does not match the seller's commitments");
    }
  }
  for (std::size_t j : bidders) {
    if (active_.count(j) && !parties_.bidders[j - 1]->code()) drop(j, "silent");
  }
}

AuctionEngine::Consensus AuctionEngine::verify_commitments() {
  std::size_t mark = board_.size();
  for (std::size_t j : live_bidders()) pump({parties_.bidders[j - 1]->check_commitments()});

  std::vector<RoleId> reporters;
  std::map<std::size_t, std::vector<RoleId>> accusers;
  std::map<std::vector<std::size_t>, std::size_t> tie_votes;
  for (std::size_t i = mark; i < board_.size(); ++i) {
    const Message& msg = board_[i];
    auto from = bidder_index(msg.from);
    if (msg.kind != kind::kZetaCheck || !from || !active_.count(*from)) continue;
    try {
      std::vector<std::size_t> flagged;
      for (const auto& id : read_strings(msg.body, "invalid")) {
        auto a = bidder_index(id);
        if (a) flagged.push_back(*a);
      }
      std::vector<std::vector<std::size_t>> groups;
      const Json& ties = field(msg.body, "ties");
      if (!ties.is_array()) throw MalformedMessage("ties must be an array");
      for (const auto& g : ties) {
        Json wrapper = Json::object();
        wrapper["g"] = g;
        std::vector<std::size_t> group;
        for (const auto& id : read_strings(wrapper, "g")) {
          auto a = bidder_index(id);
          if (a) group.push_back(*a);
        }
        std::sort(group.begin(), group.end());
        groups.push_back(group);
      }
      reporters.push_back(msg.from);
      for (std::size_t a : flagged) accusers[a].push_back(msg.from);
      for (auto& g : groups) ++tie_votes[g];
    } catch (const MalformedMessage&) {
      incident("malformed", msg.from, kEveryone);
    }
  }

  Consensus out;
  for (const auto& [accused, by] : accusers) {
    if (!active_.count(accused)) continue;
    std::size_t votes = 0;
    std::size_t others = 0;
    for (const auto& r : by) votes += r != bidder_id(accused);
    for (const auto& r : reporters) others += r != bidder_id(accused);
    if (2 * votes > others) {
      out.flagged.push_back(accused);
      if (out.reporter.empty()) {
        for (const auto& r : by) {
          if (r != bidder_id(accused)) {
            out.reporter = r;
            break;
          }
        }
      }
    }
  }
  std::set<std::size_t> tied;
  for (const auto& [group, votes] : tie_votes) {
    if (2 * votes > reporters.size()) {
      for (std::size_t v : group) {
        if (active_.count(v)) tied.insert(v);
      }
    }
  }
  out.tied.assign(tied.begin(), tied.end());
  return out;
}

void AuctionEngine::run_commit_phase(const BidPlan& plan) {
  bool code_commits_sent = false;
  while (true) {
    enter(Phase::kCommit);
    for (std::size_t j : live_bidders()) {
      if (!parties_.bidders[j - 1]->published_zeta()) pump({parties_.bidders[j - 1]->publish_zeta()});
    }
    if (!code_commits_sent) {
      pump({parties_.seller->publish_code_commits()});
      code_commits_sent = true;
    }
    checkpoint();
    Consensus c = verify_commitments();
    if (!c.flagged.empty()) {
      for (std::size_t j : c.flagged) incident("zeta-membership", bidder_id(j), c.reporter);
      for (std::size_t j : c.flagged) drop(j, "disqualified");
      continue;
    }
    if (c.tied.size() < 2) return;

    if (outcome_.tie_rounds == kMaxTieRounds) {
      stop(AbortReason::kTieUnresolved, std::nullopt,
           "bids still tied after " + std::to_string(kMaxTieRounds) + " re-bid rounds");
    }
    ++outcome_.tie_rounds;
    // A tied bidder without a scripted fallback bids the same price again.
    std::vector<std::size_t> next;
    for (std::size_t t : c.tied) {
      auto it = plan.rebids.find(t);
      std::size_t used = rebid_used_[t];
      if (it != plan.rebids.end() && used < it->second.size()) {
        next.push_back(it->second[used]);
        rebid_used_[t] = used + 1;
      } else {
        next.push_back(*parties_.bidders[t - 1]->choice());
      }
    }
    pump({parties_.seller->rerandomize(c.tied, outcome_.tie_rounds)});
    for (std::size_t idx = 0; idx < c.tied.size(); ++idx) {
      parties_.bidders[c.tied[idx] - 1]->bid(next[idx]);
    }
    run_ot_phase(c.tied);
  }
}

bool AuctionEngine::run_sharing_round() {
  enter(Phase::kSharing);
  sharing_started_ = true;
  std::size_t dropped_before = outcome_.dropped.size();
  auto changed = [&] { return outcome_.dropped.size() != dropped_before; };
  std::size_t mark = board_.size();

  for (std::size_t j : live_bidders()) pump(parties_.bidders[j - 1]->share());
  checkpoint();
  if (changed()) return false;

  if (config_.mode == Mode::kMalicious) {
    for (std::size_t j : live_bidders()) pump(parties_.bidders[j - 1]->report_missing_shares());
    std::set<std::size_t> culprits;
    for (std::size_t i = mark; i < board_.size(); ++i) {
      const Message& msg = board_[i];
      if (msg.kind != kind::kShareAck || msg.body.value("verdict", "") != "REJ") continue;
      auto sender = bidder_index(msg.body.value("sender", ""));
      if (!sender || !active_.count(*sender)) continue;
      incident("share", bidder_id(*sender), msg.from);
      culprits.insert(*sender);
    }
    if (!culprits.empty()) {
      for (std::size_t j : culprits) drop(j, "disqualified");
      return false;
    }

    for (std::size_t j : live_bidders()) {
      if (auto m = parties_.bidders[j - 1]->publish_sigma_commit()) pump({*m});
    }
    checkpoint();
    if (changed()) return false;

    std::size_t audit_mark = board_.size();
    for (std::size_t j : live_bidders()) pump({parties_.bidders[j - 1]->audit_sigmas()});
    std::map<std::size_t, std::vector<RoleId>> accusers;
    std::size_t reporters = 0;
    for (std::size_t i = audit_mark; i < board_.size(); ++i) {
      const Message& msg = board_[i];
      if (msg.kind != kind::kSigmaAudit) continue;
      ++reporters;
      try {
        for (const auto& id : read_strings(msg.body, "invalid")) {
          if (auto a = bidder_index(id); a && id != msg.from) accusers[*a].push_back(msg.from);
        }
      } catch (const MalformedMessage&) {
        incident("malformed", msg.from, kEveryone);
      }
    }
    for (const auto& [accused, by] : accusers) {
      if (active_.count(accused) && 2 * by.size() + 1 > reporters) {
        incident("sigma", bidder_id(accused), by.front());
        stop(AbortReason::kSigmaRejected, bidder_id(accused),
             "published sigma commitment does not match the share commitments");
      }
    }
  }

  for (std::size_t j : live_bidders()) {
    if (auto m = parties_.bidders[j - 1]->send_sigma()) pump({*m});
  }
  checkpoint();
  if (changed()) return false;
  std::vector<std::size_t> silent;
  for (std::size_t j : active_) {
    if (!parties_.seller->sigmas().count(j)) silent.push_back(j);
  }
  for (std::size_t j : silent) drop(j, "silent");
  if (changed()) return false;

  enter(Phase::kSolve);
  checkpoint();
  return !changed();
}

void AuctionEngine::run_sharing_phase() {
  // Each failed round removes at least one bidder, so this terminates.
  bool first = true;
  while (true) {
    if (!first && config_.mode == Mode::kMalicious) {
      enter(Phase::kSharing);
      Consensus c = verify_commitments();
      if (!c.flagged.empty()) {
        for (std::size_t j : c.flagged) incident("zeta-membership", bidder_id(j), c.reporter);
        for (std::size_t j : c.flagged) drop(j, "disqualified");
        continue;
      }
    }
    first = false;
    if (run_sharing_round()) return;
  }
}

FlagVector AuctionEngine::seller_solve() {
  SolveResult res = parties_.seller->solve();
  switch (res.status) {
    case SolveResult::Status::kSigmaRejected:
      pump({*res.announcement});
      incident("sigma", bidder_id(res.culprit), kSeller);
      stop(AbortReason::kSigmaRejected, bidder_id(res.culprit), "sigma does not match its commitment");
    case SolveResult::Status::kUnsolvable:
      stop(AbortReason::kUnsolvableKnapsack, std::nullopt,
           "the knapsack value does not decode: two bidders chose the same price or a value was "
           "tampered with");
    case SolveResult::Status::kNoBids:
      stop(AbortReason::kNoBids, std::nullopt, "no bids to decode");
    case SolveResult::Status::kSolved:
      break;
  }
  std::size_t mark = board_.size();
  pump({*res.announcement});
  for (std::size_t i = mark; i < board_.size(); ++i) {
    if (board_[i].kind != kind::kResult) continue;
    try {
      std::vector<int> bits;
      for (const auto& b : read_strings(board_[i].body, "flags")) {
        if (b != "0" && b != "1") throw MalformedMessage("bad flag");
        bits.push_back(b == "1");
      }
      if (bits.size() == config_.k()) return FlagVector(bits);
    } catch (const MalformedMessage&) {
    }
    break;
  }
  return res.flags;
}

std::size_t AuctionEngine::claim_phase() {
  enter(Phase::kClaim);
  for (const auto& msg : board_) {
    if (msg.kind == kind::kClaimVerdict && msg.body.value("verdict", "") == "REJ") {
      incident("claim", msg.body.value("bidder", ""), kSeller);
    }
  }
  auto w = parties_.seller->winner();
  if (!w) stop(AbortReason::kNoValidClaim, std::nullopt, "no bidder proved it holds the top code");
  return *w;
}

void AuctionEngine::proof_phase(std::size_t winner) {
  enter(Phase::kProof);
  std::size_t mark = board_.size();
  if (!net_.halted(kSeller)) pump({parties_.seller->request_proof(winner)});
  for (std::size_t i = mark; i < board_.size(); ++i) {
    const Message& msg = board_[i];
    if (msg.kind != kind::kProofVerdict || msg.from != bidder_id(winner)) continue;
    if (msg.body.value("verdict", "") == "ACC") return;
    break;
  }
  incident("proof2", kSeller, bidder_id(winner));
  stop(AbortReason::kProof2Failed, kSeller, "the announced flags do not match the committed sigmas");
}

WinnerOutcome AuctionEngine::settle(const FlagVector& flags, std::size_t winner) const {
  WinningPrices wp = winning_prices(flags, config_.prices);
  WinnerOutcome out;
  out.highest = wp.highest;
  out.second = wp.second;
  out.winner = bidder_id(winner);
  out.flags = flags;
  if (config_.payment_rule == PaymentRule::kFirstPrice) {
    out.paid = wp.highest;
  } else {
    out.paid = wp.second ? *wp.second : config_.prices.at(1);
  }
  return out;
}

Outcome AuctionEngine::run(const BidPlan& plan) {
  if (plan.choices.size() != config_.n) {
    throw ParameterError("expected " + std::to_string(config_.n) + " bids, got " +
                         std::to_string(plan.choices.size()));
  }
  for (const auto& [j, choices] : plan.rebids) {
    if (j < 1 || j > config_.n) throw ParameterError("re-bids name a bidder out of range");
    for (std::size_t c : choices) {
      if (c < 1 || c > config_.k()) throw ParameterError("re-bid price index out of range");
    }
  }
  for (std::size_t j = 1; j <= config_.n; ++j) parties_.bidders[j - 1]->bid(plan.choices[j - 1]);

  try {
    enter(Phase::kInit);
    pump({parties_.seller->announce()});
    checkpoint();
    run_ot_phase(live_bidders());
    if (config_.mode == Mode::kMalicious) run_commit_phase(plan);
    run_sharing_phase();
    FlagVector flags = seller_solve();
    std::size_t winner = claim_phase();
    if (config_.mode == Mode::kMalicious) proof_phase(winner);
    try {
      outcome_.result = settle(flags, winner);
    } catch (const NoBids&) {
      stop(AbortReason::kNoBids, std::nullopt, "the announced flags are all zero");
    }
  } catch (const Stop& s) {
    outcome_.result = s.outcome;
  }
  return outcome_;
}

}  // namespace kauction
