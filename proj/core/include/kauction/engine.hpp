#ifndef KAUCTION_ENGINE_HPP_
#define KAUCTION_ENGINE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kauction/protocol.hpp"

namespace kauction {

struct Delivery {
  RoleId to;
  Message message;
};

// Transport seen by the engine. The implementation decides who receives a
// message and what they receive, and may swallow it entirely.
class Network {
 public:
  virtual ~Network() = default;
  virtual std::vector<Delivery> send(const Message& msg) = 0;
  // A halted participant neither sends nor receives from now on.
  virtual bool halted(const RoleId& role) const = 0;
  // Stops delivering to a bidder that left the auction.
  virtual void remove(const RoleId& role) = 0;
  virtual void begin_phase(Phase) {}
};

// Price index per bidder (1-based, bidder j at position j-1), plus the
// choices a bidder falls back to after each tie round.
struct BidPlan {
  std::vector<std::size_t> choices;
  std::map<std::size_t, std::vector<std::size_t>> rebids;
};

enum class AbortReason {
  kSellerRejected,      // a bidder rejected the code it got by OT
  kSellerHalted,
  kTooFewBidders,
  kTieUnresolved,
  kUnsolvableKnapsack,  // a tie or tampering collapsed the decoding
  kSigmaRejected,
  kNoBids,
  kNoValidClaim,
  kProof2Failed,
};

std::string_view to_string(AbortReason r);

// A failed check observed during the run.
struct Incident {
  std::string check;
  RoleId culprit;
  RoleId reporter;
  Phase phase = Phase::kInit;
};

struct WinnerOutcome {
  Money highest = 0;
  std::optional<Money> second;
  RoleId winner;
  Money paid = 0;
  FlagVector flags;
};

struct AbortOutcome {
  AbortReason reason = AbortReason::kNoBids;
  std::optional<RoleId> culprit;
  std::string detail;
};

struct Outcome {
  std::variant<WinnerOutcome, AbortOutcome> result;
  std::vector<Incident> incidents;
  std::vector<RoleId> dropped;
  unsigned tie_rounds = 0;

  bool aborted() const { return std::holds_alternative<AbortOutcome>(result); }
  const WinnerOutcome& winner() const { return std::get<WinnerOutcome>(result); }
  const AbortOutcome& abort() const { return std::get<AbortOutcome>(result); }
};

struct Participants {
  std::unique_ptr<Seller> seller;
  std::vector<std::unique_ptr<Bidder>> bidders;  // bidder j at position j-1
};

// Honest participants for every role.
Participants honest_participants(const AuctionConfig& config);

// Drives the phases in order, pumping each message through the network
// and into its recipients until the queue drains.
class AuctionEngine {
 public:
  static constexpr unsigned kMaxTieRounds = 3;

  AuctionEngine(const AuctionConfig& config, Participants parties, Network& network);

  // Throws ParameterError when the plan does not match the config.
  Outcome run(const BidPlan& plan);

  // Public messages as delivered, in order.
  const std::vector<Message>& board() const { return board_; }
  const Seller& seller() const { return *parties_.seller; }
  const Bidder& bidder(std::size_t j) const { return *parties_.bidders.at(j - 1); }

 private:
  struct Stop {
    AbortOutcome outcome;
  };
  struct Consensus {
    std::vector<std::size_t> flagged;
    std::vector<std::size_t> tied;
    RoleId reporter;
  };

  [[noreturn]] void stop(AbortReason reason, std::optional<RoleId> culprit, std::string detail);
  void enter(Phase phase);
  void pump(std::vector<Message> initial);
  void incident(std::string check, RoleId culprit, RoleId reporter);
  void checkpoint();
  void drop(std::size_t j, std::string_view reason);
  DropStage stage_for(std::size_t j) const;
  std::vector<std::size_t> live_bidders() const;

  void run_ot_phase(const std::vector<std::size_t>& bidders);
  void run_commit_phase(const BidPlan& plan);
  Consensus verify_commitments();
  bool run_sharing_round();
  void run_sharing_phase();
  FlagVector seller_solve();
  std::size_t claim_phase();
  void proof_phase(std::size_t winner);
  WinnerOutcome settle(const FlagVector& flags, std::size_t winner) const;

  const AuctionConfig& config_;
  Participants parties_;
  Network& net_;
  Phase phase_ = Phase::kInit;
  std::set<std::size_t> active_;
  std::map<std::size_t, std::size_t> rebid_used_;
  bool sharing_started_ = false;
  std::vector<Message> board_;
  Outcome outcome_;
};

}  // namespace kauction

#endif  // KAUCTION_ENGINE_HPP_
