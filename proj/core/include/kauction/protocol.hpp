#ifndef KAUCTION_PROTOCOL_HPP_
#define KAUCTION_PROTOCOL_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kauction/group.hpp"
#include "kauction/knapsack.hpp"
#include "kauction/messages.hpp"
#include "kauction/ot.hpp"
#include "kauction/sharing.hpp"
#include "kauction/zkp.hpp"

namespace kauction {

enum class Mode { kHonest, kMalicious };
enum class PaymentRule { kFirstPrice, kSecondPrice };

std::string_view to_string(Mode m);
std::string_view to_string(PaymentRule r);
// Both throw ConfigError on unknown names.
Mode mode_from_string(std::string_view s);
PaymentRule payment_rule_from_string(std::string_view s);

// Values that replace the seeded draws, for reproducing a worked example.
struct FixedValues {
  std::optional<std::vector<BigInt>> codes;        // k entries
  std::optional<std::vector<BigInt>> randomizers;  // n entries
  // Row j is bidder j's split of its randomized code. Only used while all
  // n bidders are still in; a re-share after a dropout draws fresh shares.
  std::optional<std::vector<std::vector<BigInt>>> shares;
};

struct AuctionConfig {
  AuctionConfig(GroupParams params, PriceTable prices, std::size_t n);

  Mode mode = Mode::kHonest;
  PaymentRule payment_rule = PaymentRule::kSecondPrice;
  GroupParams params;
  PriceTable prices;
  std::size_t n;
  std::string seed = "kauction";
  std::map<RoleId, std::string> role_seeds;  // overrides the derived seed
  FixedValues fixed;

  std::size_t k() const { return prices.size(); }
  // Throws ParameterError on n < 2, fixed values of the wrong shape, or
  // fixed codes / randomizers that break their invariants.
  void validate() const;
  Rng rng_for(const RoleId& role) const;
};

// How far a dropped bidder got.
enum class DropStage {
  kBeforeOt,      // never received a code
  kAfterOt,       // holds a code, sharing not started
  kAfterSharing,  // shares already exchanged
};

std::string_view to_string(DropStage s);
DropStage drop_stage_from_string(std::string_view s);

struct WinnerClaim {
  std::size_t claimant = 0;  // 1-based
  Scalar revealed;
};

struct SolveResult {
  enum class Status { kSolved, kSigmaRejected, kUnsolvable, kNoBids };
  Status status = Status::kNoBids;
  FlagVector flags;          // as announced
  std::size_t culprit = 0;   // bidder whose sigma failed its commitment
  std::optional<Message> announcement;
};

class Seller {
 public:
  explicit Seller(const AuctionConfig& config);
  virtual ~Seller() = default;
  Seller(const Seller&) = delete;
  Seller& operator=(const Seller&) = delete;

  const RoleId& id() const { return kSeller; }
  void enter(Phase phase) { phase_ = phase; }
  Phase phase() const { return phase_; }

  const CodeBook& codebook() const { return book_; }
  // Current randomizer of bidder j, after any dropout or tie adjustment.
  const Scalar& randomizer(std::size_t j) const { return r_.at(j - 1); }
  const std::set<std::size_t>& active() const { return active_; }
  bool served(std::size_t j) const { return served_.count(j) != 0; }
  const std::map<std::size_t, Scalar>& sigmas() const { return sigma_; }
  const std::optional<Scalar>& sigma_k() const { return sigma_k_; }
  const std::optional<FlagVector>& flags() const { return flags_; }
  std::optional<std::size_t> winner() const { return winner_; }

  Message announce() const;
  std::vector<Message> handle(const Message& msg);
  // Shuffled g_b^c_i list plus g_b^r_j and g_b^-r_j for every active bidder.
  Message publish_code_commits();
  // Fresh randomizers for the tied bidders whose sum equals that of the
  // ones they replace, so the total still vanishes.
  Message rerandomize(const std::vector<std::size_t>& tied, unsigned round);
  // Removes bidder j and folds r_j into the lowest remaining bidder. Emits
  // the public notice and, when that bidder already holds a code, a
  // private adjustment.
  std::vector<Message> drop_bidder(std::size_t j, DropStage stage, std::string_view reason);
  SolveResult solve();
  bool verify_winner_claim(const WinnerClaim& claim) const;
  Message request_proof(std::size_t winner);

 protected:
  virtual std::vector<Bytes> ot_messages(std::size_t j) const;
  virtual FlagVector announced_flags(const FlagVector& solved) const { return solved; }
  const AuctionConfig& config() const { return config_; }

 private:
  Message make(std::string_view kind, const RoleId& to, Json body) const;
  std::vector<GroupElement> active_sigma_commits() const;

  const AuctionConfig& config_;
  Rng rng_;
  CodeBook book_;
  std::vector<Scalar> r_;
  std::vector<GroupElement> eta_;
  std::set<std::size_t> active_;
  std::set<std::size_t> served_;
  std::map<std::size_t, Scalar> sigma_;
  std::map<std::size_t, GroupElement> sigma_commits_;
  std::optional<Scalar> sigma_k_;
  std::optional<FlagVector> flags_;
  std::optional<std::size_t> winner_;
  std::optional<std::pair<std::size_t, Scalar>> proof_nonce_;  // (winner, z)
  Phase phase_ = Phase::kInit;
};

class Bidder {
 public:
  Bidder(const AuctionConfig& config, std::size_t j);
  virtual ~Bidder() = default;
  Bidder(const Bidder&) = delete;
  Bidder& operator=(const Bidder&) = delete;

  std::size_t index() const { return j_; }
  const RoleId& id() const { return id_; }
  void enter(Phase phase) { phase_ = phase; }

  // Records the price index (1-based). Throws ParameterError when out of
  // range or while a code from an earlier choice is still held.
  void bid(std::size_t price_index);
  std::optional<std::size_t> choice() const { return choice_; }
  const std::optional<Scalar>& code() const { return code_; }
  std::optional<bool> accepted() const { return accepted_; }
  const std::optional<Scalar>& sigma() const { return sigma_; }
  bool published_zeta() const { return published_zeta_; }
  const std::set<std::size_t>& active() const { return active_; }

  Message request_code();
  std::vector<Message> handle(const Message& msg);
  Message publish_zeta();
  // Membership of every active bidder's zeta, plus tie groups.
  Message check_commitments() const;
  // Share commitments (malicious mode) followed by one share per peer.
  std::vector<Message> share();
  // REJ for every peer whose share never arrived (malicious mode).
  std::vector<Message> report_missing_shares() const;
  // Both return nothing while a share is missing.
  std::optional<Message> publish_sigma_commit();
  std::optional<Message> send_sigma();
  // Checks every published sigma commitment against its column product.
  Message audit_sigmas() const;

 protected:
  virtual GroupElement zeta_value();
  virtual bool wants_to_claim(const FlagVector& flags) const;
  const AuctionConfig& config() const { return config_; }
  Rng& rng() { return rng_; }

 private:
  Message make(std::string_view kind, const RoleId& to, Json body) const;
  std::vector<std::size_t> roster() const { return {active_.begin(), active_.end()}; }
  std::size_t roster_position(std::size_t v) const;
  void reset_sharing();
  std::optional<Scalar> compute_sigma();
  std::vector<Message> on_announce(const Message& msg);
  std::vector<Message> on_ot_response(const Message& msg);
  std::vector<Message> on_code_commits(const Message& msg);
  std::vector<Message> on_rerandomize(const Message& msg);
  std::vector<Message> on_dropout(const Message& msg);
  std::vector<Message> on_code_adjust(const Message& msg);
  std::vector<Message> on_share(const Message& msg);
  std::vector<Message> on_result(const Message& msg);
  std::vector<Message> on_proof_commit(const Message& msg);
  std::vector<Message> on_proof_response(const Message& msg);

  const AuctionConfig& config_;
  std::size_t j_;
  RoleId id_;
  Rng rng_;
  Phase phase_ = Phase::kInit;

  std::optional<std::size_t> choice_;
  std::optional<OtReceiverState> ot_state_;
  std::optional<Scalar> code_;
  std::optional<bool> accepted_;
  bool published_zeta_ = false;
  std::set<std::size_t> active_;

  // Public view.
  std::vector<GroupElement> eta_;
  std::map<std::size_t, GroupElement> xi_;
  std::map<std::size_t, GroupElement> rand_;
  std::map<std::size_t, GroupElement> neg_rand_;
  std::vector<GroupElement> shuffled_;
  std::map<std::size_t, GroupElement> zeta_;

  // Sharing round.
  std::vector<Scalar> own_shares_;
  std::map<std::size_t, std::vector<GroupElement>> share_commits_;
  std::map<std::size_t, Scalar> received_;
  std::map<std::size_t, GroupElement> sigma_commits_;
  std::optional<Scalar> sigma_;

  std::optional<FlagVector> flags_;
  std::optional<std::pair<GroupElement, GroupElement>> proof_commit_;
  std::optional<Scalar> challenge_;
};

// Scripted deviations that cannot be expressed as edits on the wire.
struct SellerFault {
  std::optional<std::pair<std::size_t, std::size_t>> swap_ot_slots;  // 1-based
  std::optional<std::size_t> extra_flag;                              // 1-based
};

class CorruptSeller : public Seller {
 public:
  CorruptSeller(const AuctionConfig& config, SellerFault fault)
      : Seller(config), fault_(std::move(fault)) {}

 protected:
  std::vector<Bytes> ot_messages(std::size_t j) const override;
  FlagVector announced_flags(const FlagVector& solved) const override;

 private:
  SellerFault fault_;
};

struct BidderFault {
  bool forge_zeta = false;   // commit to a code never received
  bool false_claim = false;  // claim the win whatever the flags say
};

class CorruptBidder : public Bidder {
 public:
  CorruptBidder(const AuctionConfig& config, std::size_t j, BidderFault fault)
      : Bidder(config, j), fault_(fault) {}

 protected:
  GroupElement zeta_value() override;
  bool wants_to_claim(const FlagVector& flags) const override;

 private:
  BidderFault fault_;
};

// False once bidder j has broadcast ACC for its code: a later complaint
// about that code is inadmissible.
bool code_complaint_admissible(const std::vector<Message>& board, const RoleId& bidder);

}  // namespace kauction

#endif  // KAUCTION_PROTOCOL_HPP_
