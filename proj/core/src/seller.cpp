#include <algorithm>

#include "kauction/errors.hpp"
#include "kauction/protocol.hpp"

namespace kauction {

namespace {

CodeBook make_book(const AuctionConfig& config, Rng& rng) {
  if (config.fixed.codes) return CodeBook(*config.fixed.codes, config.params.q);
  return generate_codes(config.k(), config.params.q, rng);
}

std::vector<Scalar> make_randomizers(const AuctionConfig& config, Rng& rng) {
  if (config.fixed.randomizers) {
    std::vector<Scalar> r;
    for (const auto& x : *config.fixed.randomizers) r.emplace_back(x);
    return RandomizerSet(std::move(r), config.params).values();
  }
  return generate_randomizers(config.n, config.params, rng).values();
}

}  // namespace

Seller::Seller(const AuctionConfig& config)
    : config_((config.validate(), config)),
      rng_(config.rng_for(kSeller)),
      book_(make_book(config, rng_)),
      r_(make_randomizers(config, rng_)) {
  for (const auto& c : book_.codes()) eta_.push_back(commit(config.params, config.params.g_s, Scalar(c)));
  for (std::size_t j = 1; j <= config.n; ++j) active_.insert(j);
}

Message Seller::make(std::string_view kind, const RoleId& to, Json body) const {
  return make_message(kind, kSeller, to, std::move(body), phase_);
}

Message Seller::announce() const {
  const GroupParams& params = config_.params;
  Json body = Json::object();
  body["mode"] = std::string(to_string(config_.mode));
  body["n"] = std::to_string(config_.n);
  Json prices = Json::array();
  for (Money p : config_.prices.prices()) prices.push_back(std::to_string(p));
  body["prices"] = prices;
  if (config_.mode == Mode::kMalicious) {
    body["eta"] = encode_elements(eta_);
    Json xi = Json::object();
    for (std::size_t j : active_) {
      xi[bidder_id(j)] = to_decimal(commit(params, params.g_s, r_[j - 1]).value);
    }
    body["xi"] = xi;
  }
  return make(kind::kAnnounce, kEveryone, std::move(body));
}

std::vector<Bytes> Seller::ot_messages(std::size_t j) const {
  std::vector<Bytes> out;
  for (const auto& c : book_.codes()) {
    Scalar code = randomize_code(Scalar(c), r_[j - 1], config_.params);
    out.push_back(to_fixed_bytes(code.value, config_.params.scalar_bytes()));
  }
  return out;
}

std::vector<Message> Seller::handle(const Message& msg) {
  const GroupParams& params = config_.params;
  auto j = bidder_index(msg.from);
  if (!j) return {};

  if (msg.kind == kind::kOtRequest) {
    if (!active_.count(*j)) return {};
    OtRequest request{read_element(params, msg.body, "y")};
    OtResponse response = ot_respond(ot_messages(*j), request, params, rng_);
    served_.insert(*j);
    Json u = Json::array();
    Json v = Json::array();
    for (const auto& pair : response.pairs) {
      u.push_back(to_decimal(pair.u.value));
      v.push_back(to_hex(pair.v));
    }
    Json body = Json::object();
    body["u"] = u;
    body["v"] = v;
    return {make(kind::kOtResponse, msg.from, std::move(body))};
  }
  if (msg.kind == kind::kSigmaCommit) {
    sigma_commits_[*j] = read_element(params, msg.body, "commit");
    return {};
  }
  if (msg.kind == kind::kSigma) {
    if (active_.count(*j)) sigma_[*j] = read_scalar(params, msg.body, "sigma");
    return {};
  }
  if (msg.kind == kind::kClaim) {
    WinnerClaim claim{*j, read_scalar(params, msg.body, "code")};
    bool ok = !winner_ && verify_winner_claim(claim);
    if (ok) winner_ = *j;
    Json body = Json::object();
    body["bidder"] = msg.from;
    body["verdict"] = ok ? "ACC" : "REJ";
    return {make(kind::kClaimVerdict, kEveryone, std::move(body))};
  }
  if (msg.kind == kind::kProofChallenge) {
    if (!proof_nonce_ || proof_nonce_->first != *j || !sigma_k_) return {};
    Scalar omega = read_scalar(params, msg.body, "omega");
    Scalar r = eqdl_respond(params, proof_nonce_->second, *sigma_k_, omega);
    proof_nonce_.reset();
    Json body = Json::object();
    body["r"] = to_decimal(r.value);
    return {make(kind::kProofResponse, msg.from, std::move(body))};
  }
  return {};
}

Message Seller::publish_code_commits() {
  const GroupParams& params = config_.params;
  std::vector<GroupElement> shuffled;
  for (const auto& c : book_.codes()) shuffled.push_back(commit(params, params.g_b, Scalar(c)));
  shuffle(shuffled, rng_);
  Json rand = Json::object();
  Json neg_rand = Json::object();
  for (std::size_t j : active_) {
    rand[bidder_id(j)] = to_decimal(commit(params, params.g_b, r_[j - 1]).value);
    neg_rand[bidder_id(j)] = to_decimal(commit(params, params.g_b, neg_mod(params, r_[j - 1])).value);
  }
  Json body = Json::object();
  body["shuffled"] = encode_elements(shuffled);
  body["rand"] = rand;
  body["neg_rand"] = neg_rand;
  return make(kind::kCodeCommits, kEveryone, std::move(body));
}

Message Seller::rerandomize(const std::vector<std::size_t>& tied, unsigned round) {
  const GroupParams& params = config_.params;
  if (tied.size() < 2) throw ParameterError("a tie involves at least two bidders");
  Scalar target(0);
  for (std::size_t t : tied) target = add_mod(params, target, r_.at(t - 1));
  auto fresh = generate_randomizers_summing_to(tied.size(), target, params, rng_);
  Json ids = Json::array();
  Json xi = Json::object();
  Json rand = Json::object();
  Json neg_rand = Json::object();
  for (std::size_t idx = 0; idx < tied.size(); ++idx) {
    std::size_t t = tied[idx];
    r_[t - 1] = fresh[idx];
    served_.erase(t);
    ids.push_back(bidder_id(t));
    xi[bidder_id(t)] = to_decimal(commit(params, params.g_s, fresh[idx]).value);
    rand[bidder_id(t)] = to_decimal(commit(params, params.g_b, fresh[idx]).value);
    neg_rand[bidder_id(t)] = to_decimal(commit(params, params.g_b, neg_mod(params, fresh[idx])).value);
  }
  Json body = Json::object();
  body["round"] = std::to_string(round);
  body["bidders"] = ids;
  body["xi"] = xi;
  body["rand"] = rand;
  body["neg_rand"] = neg_rand;
  return make(kind::kRerandomize, kEveryone, std::move(body));
}

std::vector<Message> Seller::drop_bidder(std::size_t j, DropStage stage, std::string_view reason) {
  active_.erase(j);
  sigma_.clear();
  sigma_commits_.clear();
  std::optional<std::size_t> target;
  if (!active_.empty()) {
    target = *active_.begin();
    r_[*target - 1] = add_mod(config_.params, r_[*target - 1], r_[j - 1]);
  }
  Json body = Json::object();
  body["bidder"] = bidder_id(j);
  body["absorbed_by"] = target ? bidder_id(*target) : "";
  body["stage"] = std::string(to_string(stage));
  body["reason"] = std::string(reason);
  std::vector<Message> out{make(kind::kDropout, kEveryone, std::move(body))};
  if (target && served(*target)) {
    Json adjust = Json::object();
    adjust["dropped"] = bidder_id(j);
    adjust["delta"] = to_decimal(r_[j - 1].value);
    out.push_back(make(kind::kCodeAdjust, bidder_id(*target), std::move(adjust)));
  }
  return out;
}

std::vector<GroupElement> Seller::active_sigma_commits() const {
  std::vector<GroupElement> out;
  for (std::size_t j : active_) {
    auto it = sigma_commits_.find(j);
    out.push_back(it == sigma_commits_.end() ? GroupElement(0) : it->second);
  }
  return out;
}

SolveResult Seller::solve() {
  const GroupParams& params = config_.params;
  SolveResult result;
  if (active_.empty() || sigma_.empty()) return result;
  Scalar total(0);
  for (std::size_t j : active_) {
    auto it = sigma_.find(j);
    bool ok = it != sigma_.end();
    if (ok && config_.mode == Mode::kMalicious) {
      auto c = sigma_commits_.find(j);
      ok = c != sigma_commits_.end() && commit(params, params.g_b, it->second) == c->second;
    }
    if (!ok) {
      result.status = SolveResult::Status::kSigmaRejected;
      result.culprit = j;
      Json body = Json::object();
      body["bidder"] = bidder_id(j);
      result.announcement = make(kind::kSigmaReject, kEveryone, std::move(body));
      return result;
    }
    total = add_mod(params, total, it->second);
  }
  sigma_k_ = total;
  FlagVector solved;
  try {
    solved = kauction::solve(book_, total);
  } catch (const UnsolvableKnapsack&) {
    result.status = SolveResult::Status::kUnsolvable;
    return result;
  }
  if (solved.count() == 0) return result;
  flags_ = announced_flags(solved);
  result.status = SolveResult::Status::kSolved;
  result.flags = *flags_;
  Json bits = Json::array();
  for (int b : flags_->bits()) bits.push_back(std::to_string(b));
  Json body = Json::object();
  body["flags"] = bits;
  result.announcement = make(kind::kResult, kEveryone, std::move(body));
  return result;
}

bool Seller::verify_winner_claim(const WinnerClaim& claim) const {
  if (!flags_ || !active_.count(claim.claimant)) return false;
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < flags_->size(); ++i) {
    if (flags_->test(i)) top = i;
  }
  if (!top) return false;
  const GroupParams& params = config_.params;
  if (!params.is_scalar(claim.revealed.value)) return false;
  Scalar code = sub_mod(params, claim.revealed, r_[claim.claimant - 1]);
  return code.value == book_.code(*top);
}

Message Seller::request_proof(std::size_t winner) {
  if (!flags_ || !sigma_k_) throw ParameterError("no announced result to prove");
  const GroupParams& params = config_.params;
  EqdlStatement statement = proof2_statement(params, eta_, active_sigma_commits(), *flags_);
  EqdlCommitment c = eqdl_commit(params, statement, rng_);
  proof_nonce_ = std::make_pair(winner, c.nonce);
  Json body = Json::object();
  body["a"] = to_decimal(c.commit_a.value);
  body["b"] = to_decimal(c.commit_b.value);
  return make(kind::kProofCommit, bidder_id(winner), std::move(body));
}

std::vector<Bytes> CorruptSeller::ot_messages(std::size_t j) const {
  auto out = Seller::ot_messages(j);
  if (fault_.swap_ot_slots) {
    auto [a, b] = *fault_.swap_ot_slots;
    if (a >= 1 && b >= 1 && a <= out.size() && b <= out.size()) std::swap(out[a - 1], out[b - 1]);
  }
  return out;
}

FlagVector CorruptSeller::announced_flags(const FlagVector& solved) const {
  FlagVector out = solved;
  if (fault_.extra_flag && *fault_.extra_flag >= 1 && *fault_.extra_flag <= out.size()) {
    out.set(*fault_.extra_flag - 1, true);
  }
  return out;
}

}  // namespace kauction
