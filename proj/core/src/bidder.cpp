#include <algorithm>

#include "kauction/errors.hpp"
#include "kauction/protocol.hpp"

namespace kauction {

namespace {

std::map<std::size_t, GroupElement> read_bidder_map(const GroupParams& params, const Json& body,
                                                    std::string_view name) {
  const Json& obj = field(body, name);
  if (!obj.is_object()) throw MalformedMessage("field '" + std::string(name) + "' must be an object");
  std::map<std::size_t, GroupElement> out;
  for (const auto& [key, value] : obj.items()) {
    auto j = bidder_index(key);
    if (!j) throw MalformedMessage("field '" + std::string(name) + "' has a non-bidder key");
    Json wrapper = Json::object();
    wrapper["v"] = value;
    out[*j] = read_element(params, wrapper, "v");
  }
  return out;
}

Json verdict(bool ok) { return ok ? "ACC" : "REJ"; }

}  // namespace

Bidder::Bidder(const AuctionConfig& config, std::size_t j)
    : config_(config), j_(j), id_(bidder_id(j)), rng_(config.rng_for(bidder_id(j))) {
  if (j == 0 || j > config.n) throw ParameterError("bidder index out of range");
  for (std::size_t v = 1; v <= config.n; ++v) active_.insert(v);
}

Message Bidder::make(std::string_view kind, const RoleId& to, Json body) const {
  return make_message(kind, id_, to, std::move(body), phase_);
}

void Bidder::bid(std::size_t price_index) {
  if (price_index < 1 || price_index > config_.k()) {
    throw ParameterError("price index " + std::to_string(price_index) + " outside [1, " +
                         std::to_string(config_.k()) + "]");
  }
  if (code_) throw ParameterError("bidder already holds a code for an earlier choice");
  choice_ = price_index;
}

std::size_t Bidder::roster_position(std::size_t v) const {
  auto it = active_.find(v);
  if (it == active_.end()) throw ParameterError("bidder not in the roster");
  return static_cast<std::size_t>(std::distance(active_.begin(), it));
}

void Bidder::reset_sharing() {
  own_shares_.clear();
  share_commits_.clear();
  received_.clear();
  sigma_commits_.clear();
  sigma_.reset();
}

Message Bidder::request_code() {
  if (!choice_) throw ParameterError("no price chosen");
  auto [request, state] = ot_request(*choice_, config_.k(), config_.params, rng_);
  ot_state_ = state;
  Json body = Json::object();
  body["y"] = to_decimal(request.y.value);
  return make(kind::kOtRequest, kSeller, std::move(body));
}

std::vector<Message> Bidder::handle(const Message& msg) {
  const GroupParams& params = config_.params;
  if (msg.from == kSeller) {
    if (msg.kind == kind::kAnnounce) return on_announce(msg);
    if (msg.kind == kind::kOtResponse) return on_ot_response(msg);
    if (msg.kind == kind::kCodeCommits) return on_code_commits(msg);
    if (msg.kind == kind::kRerandomize) return on_rerandomize(msg);
    if (msg.kind == kind::kDropout) return on_dropout(msg);
    if (msg.kind == kind::kCodeAdjust) return on_code_adjust(msg);
    if (msg.kind == kind::kResult) return on_result(msg);
    if (msg.kind == kind::kProofCommit) return on_proof_commit(msg);
    if (msg.kind == kind::kProofResponse) return on_proof_response(msg);
    return {};
  }
  auto sender = bidder_index(msg.from);
  if (!sender || !active_.count(*sender)) return {};
  if (msg.kind == kind::kZeta) {
    zeta_[*sender] = read_element(params, msg.body, "zeta");
  } else if (msg.kind == kind::kShareCommits) {
    share_commits_[*sender] = read_elements(params, msg.body, "commits");
  } else if (msg.kind == kind::kShare) {
    return on_share(msg);
  } else if (msg.kind == kind::kSigmaCommit) {
    sigma_commits_[*sender] = read_element(params, msg.body, "commit");
  }
  return {};
}

std::vector<Message> Bidder::on_announce(const Message& msg) {
  if (config_.mode != Mode::kMalicious) return {};
  const GroupParams& params = config_.params;
  auto eta = read_elements(params, msg.body, "eta");
  if (eta.size() != config_.k()) throw MalformedMessage("announce carries the wrong number of eta");
  eta_ = std::move(eta);
  xi_ = read_bidder_map(params, msg.body, "xi");
  return {};
}

std::vector<Message> Bidder::on_ot_response(const Message& msg) {
  if (!ot_state_) return {};
  const GroupParams& params = config_.params;
  auto u = read_elements(params, msg.body, "u");
  auto v = read_strings(msg.body, "v");
  if (u.size() != config_.k() || v.size() != config_.k()) {
    throw MalformedMessage("OT response must carry one pair per price");
  }
  OtResponse response;
  for (std::size_t i = 0; i < u.size(); ++i) response.pairs.push_back({u[i], from_hex(v[i])});
  Bytes plain = ot_recover(response, *ot_state_, params);
  ot_state_.reset();
  code_ = params.scalar(from_bytes(plain));
  if (config_.mode != Mode::kMalicious) return {};

  auto xi = xi_.find(j_);
  accepted_ = xi != xi_.end() && verify_received_code(params, eta_.at(*choice_ - 1), xi->second, *code_);
  Json body = Json::object();
  body["verdict"] = verdict(*accepted_);
  return {make(kind::kOtAck, kEveryone, std::move(body))};
}

std::vector<Message> Bidder::on_code_commits(const Message& msg) {
  const GroupParams& params = config_.params;
  shuffled_ = read_elements(params, msg.body, "shuffled");
  for (auto& [v, e] : read_bidder_map(params, msg.body, "rand")) rand_[v] = e;
  for (auto& [v, e] : read_bidder_map(params, msg.body, "neg_rand")) neg_rand_[v] = e;
  return {};
}

std::vector<Message> Bidder::on_rerandomize(const Message& msg) {
  const GroupParams& params = config_.params;
  for (auto& [v, e] : read_bidder_map(params, msg.body, "xi")) xi_[v] = e;
  for (auto& [v, e] : read_bidder_map(params, msg.body, "rand")) rand_[v] = e;
  for (auto& [v, e] : read_bidder_map(params, msg.body, "neg_rand")) neg_rand_[v] = e;
  for (const auto& id : read_strings(msg.body, "bidders")) {
    auto v = bidder_index(id);
    if (!v) throw MalformedMessage("rerandomize names a non-bidder");
    zeta_.erase(*v);
    if (*v == j_) {
      choice_.reset();
      ot_state_.reset();
      code_.reset();
      accepted_.reset();
      published_zeta_ = false;
    }
  }
  return {};
}

std::vector<Message> Bidder::on_dropout(const Message& msg) {
  const GroupParams& params = config_.params;
  auto dropped = bidder_index(read_string(msg.body, "bidder"));
  if (!dropped) throw MalformedMessage("dropout names a non-bidder");
  active_.erase(*dropped);
  zeta_.erase(*dropped);
  reset_sharing();
  std::string absorbed = read_string(msg.body, "absorbed_by");
  auto m = bidder_index(absorbed);
  if (m) {
    auto fold = [&](std::map<std::size_t, GroupElement>& view) {
      auto from = view.find(*dropped);
      auto into = view.find(*m);
      if (from != view.end() && into != view.end()) into->second = mul_mod(params, into->second, from->second);
    };
    fold(xi_);
    fold(rand_);
    fold(neg_rand_);
  }
  return {};
}

std::vector<Message> Bidder::on_code_adjust(const Message& msg) {
  const GroupParams& params = config_.params;
  auto dropped = bidder_index(read_string(msg.body, "dropped"));
  Scalar delta = read_scalar(params, msg.body, "delta");
  if (!dropped || !code_) return {};
  if (config_.mode == Mode::kMalicious) {
    auto xi = xi_.find(*dropped);
    if (xi == xi_.end() || commit(params, params.g_s, delta) != xi->second) return {};
  }
  code_ = add_mod(params, *code_, delta);
  if (published_zeta_) return {publish_zeta()};
  return {};
}

std::vector<Message> Bidder::on_share(const Message& msg) {
  const GroupParams& params = config_.params;
  std::size_t sender = *bidder_index(msg.from);
  Scalar d = read_scalar(params, msg.body, "d");
  received_[sender] = d;
  if (config_.mode != Mode::kMalicious) return {};

  std::size_t n = active_.size();
  auto row = share_commits_.find(sender);
  auto zeta = zeta_.find(sender);
  bool ok = row != share_commits_.end() && row->second.size() == n && zeta != zeta_.end() &&
            verify_share(params, d, row->second[roster_position(j_)]) &&
            verify_row(params, row->second, zeta->second, n);
  Json body = Json::object();
  body["sender"] = msg.from;
  body["verdict"] = verdict(ok);
  return {make(kind::kShareAck, kEveryone, std::move(body))};
}

std::vector<Message> Bidder::on_result(const Message& msg) {
  auto bits = read_strings(msg.body, "flags");
  if (bits.size() != config_.k()) throw MalformedMessage("result must carry one flag per price");
  std::vector<int> flags;
  for (const auto& b : bits) {
    if (b != "0" && b != "1") throw MalformedMessage("flags must be \"0\" or \"1\"");
    flags.push_back(b == "1" ? 1 : 0);
  }
  flags_ = FlagVector(flags);
  if (!code_ || !wants_to_claim(*flags_)) return {};
  Json body = Json::object();
  body["code"] = to_decimal(code_->value);
  return {make(kind::kClaim, kSeller, std::move(body))};
}

std::vector<Message> Bidder::on_proof_commit(const Message& msg) {
  const GroupParams& params = config_.params;
  proof_commit_ = std::make_pair(read_element(params, msg.body, "a"), read_element(params, msg.body, "b"));
  challenge_ = Scalar(rng_.uniform_nonzero_below(params.q));
  Json body = Json::object();
  body["omega"] = to_decimal(challenge_->value);
  return {make(kind::kProofChallenge, kSeller, std::move(body))};
}

std::vector<Message> Bidder::on_proof_response(const Message& msg) {
  if (!proof_commit_ || !challenge_ || !flags_) return {};
  const GroupParams& params = config_.params;
  Scalar r = read_scalar(params, msg.body, "r");
  std::vector<GroupElement> sigma_commits;
  for (std::size_t v : active_) {
    auto it = sigma_commits_.find(v);
    sigma_commits.push_back(it == sigma_commits_.end() ? GroupElement(0) : it->second);
  }
  EqdlStatement statement = proof2_statement(params, eta_, sigma_commits, *flags_);
  bool ok = eqdl_verify(params, statement, {proof_commit_->first, proof_commit_->second, *challenge_, r});
  proof_commit_.reset();
  challenge_.reset();
  Json body = Json::object();
  body["verdict"] = verdict(ok);
  return {make(kind::kProofVerdict, kEveryone, std::move(body))};
}

GroupElement Bidder::zeta_value() {
  return commit(config_.params, config_.params.g_b, *code_);
}

bool Bidder::wants_to_claim(const FlagVector& flags) const {
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags.test(i)) top = i + 1;
  }
  return top && choice_ && *top == *choice_;
}

Message Bidder::publish_zeta() {
  if (!code_) throw ParameterError("no code to commit to");
  published_zeta_ = true;
  Json body = Json::object();
  body["zeta"] = to_decimal(zeta_value().value);
  return make(kind::kZeta, kAllBidders, std::move(body));
}

Message Bidder::check_commitments() const {
  const GroupParams& params = config_.params;
  Json invalid = Json::array();
  std::map<BigInt, std::vector<std::size_t>> by_code;
  for (std::size_t v : active_) {
    auto zeta = zeta_.find(v);
    auto neg = neg_rand_.find(v);
    if (zeta == zeta_.end() || neg == neg_rand_.end() ||
        !verify_zeta_membership(params, zeta->second, neg->second, shuffled_)) {
      invalid.push_back(bidder_id(v));
      continue;
    }
    by_code[mul_mod(params, zeta->second, neg->second).value].push_back(v);
  }
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [code, members] : by_code) {
    if (members.size() > 1) groups.push_back(members);
  }
  std::sort(groups.begin(), groups.end());
  Json ties = Json::array();
  for (const auto& g : groups) {
    Json ids = Json::array();
    for (std::size_t v : g) ids.push_back(bidder_id(v));
    ties.push_back(ids);
  }
  Json body = Json::object();
  body["invalid"] = invalid;
  body["ties"] = ties;
  return make(kind::kZetaCheck, kEveryone, std::move(body));
}

std::vector<Message> Bidder::share() {
  if (!code_) throw ParameterError("no code to share");
  const GroupParams& params = config_.params;
  // Peers may already have delivered their shares; keep those.
  own_shares_.clear();
  sigma_.reset();
  std::vector<std::size_t> peers = roster();
  if (config_.fixed.shares && peers.size() == config_.n) {
    std::vector<Scalar> row;
    for (const auto& d : config_.fixed.shares->at(j_ - 1)) row.emplace_back(d);
    if (column_sum(row, params) == *code_) own_shares_ = std::move(row);
  }
  if (own_shares_.empty()) own_shares_ = split_additive(*code_, peers.size(), params, rng_);

  std::vector<Message> out;
  if (config_.mode == Mode::kMalicious) {
    std::vector<GroupElement> commits;
    for (const auto& d : own_shares_) commits.push_back(commit(params, params.g_b, d));
    Json body = Json::object();
    body["commits"] = encode_elements(commits);
    out.push_back(make(kind::kShareCommits, kAllBidders, std::move(body)));
  }
  for (std::size_t pos = 0; pos < peers.size(); ++pos) {
    if (peers[pos] == j_) continue;
    Json body = Json::object();
    body["d"] = to_decimal(own_shares_[pos].value);
    out.push_back(make(kind::kShare, bidder_id(peers[pos]), std::move(body)));
  }
  return out;
}

std::vector<Message> Bidder::report_missing_shares() const {
  std::vector<Message> out;
  if (config_.mode != Mode::kMalicious) return out;
  for (std::size_t v : active_) {
    if (v == j_ || received_.count(v)) continue;
    Json body = Json::object();
    body["sender"] = bidder_id(v);
    body["verdict"] = "REJ";
    out.push_back(make(kind::kShareAck, kEveryone, std::move(body)));
  }
  return out;
}

std::optional<Scalar> Bidder::compute_sigma() {
  if (sigma_) return sigma_;
  if (own_shares_.size() != active_.size()) return std::nullopt;
  const GroupParams& params = config_.params;
  Scalar total = own_shares_[roster_position(j_)];
  for (std::size_t v : active_) {
    if (v == j_) continue;
    auto it = received_.find(v);
    if (it == received_.end()) return std::nullopt;
    total = add_mod(params, total, it->second);
  }
  sigma_ = total;
  return sigma_;
}

std::optional<Message> Bidder::publish_sigma_commit() {
  auto sigma = compute_sigma();
  if (!sigma) return std::nullopt;
  Json body = Json::object();
  body["commit"] = to_decimal(commit(config_.params, config_.params.g_b, *sigma).value);
  return make(kind::kSigmaCommit, kEveryone, std::move(body));
}

std::optional<Message> Bidder::send_sigma() {
  auto sigma = compute_sigma();
  if (!sigma) return std::nullopt;
  Json body = Json::object();
  body["sigma"] = to_decimal(sigma->value);
  return make(kind::kSigma, kSeller, std::move(body));
}

Message Bidder::audit_sigmas() const {
  const GroupParams& params = config_.params;
  Json invalid = Json::array();
  std::size_t n = active_.size();
  for (std::size_t v : active_) {
    auto published = sigma_commits_.find(v);
    if (published == sigma_commits_.end()) {
      invalid.push_back(bidder_id(v));
      continue;
    }
    std::size_t pos = roster_position(v);
    std::vector<GroupElement> column;
    bool complete = true;
    for (std::size_t u : active_) {
      auto row = share_commits_.find(u);
      if (row == share_commits_.end() || row->second.size() != n) {
        complete = false;
        break;
      }
      column.push_back(row->second[pos]);
    }
    if (complete && product(params, column) != published->second) invalid.push_back(bidder_id(v));
  }
  Json body = Json::object();
  body["invalid"] = invalid;
  return make(kind::kSigmaAudit, kEveryone, std::move(body));
}

GroupElement CorruptBidder::zeta_value() {
  if (!fault_.forge_zeta) return Bidder::zeta_value();
  const GroupParams& params = config().params;
  return commit(params, params.g_b, Scalar(rng().uniform_below(params.q)));
}

bool CorruptBidder::wants_to_claim(const FlagVector& flags) const {
  return fault_.false_claim || Bidder::wants_to_claim(flags);
}

}  // namespace kauction
