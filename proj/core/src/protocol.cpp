#include "kauction/protocol.hpp"

#include "kauction/errors.hpp"

namespace kauction {

std::string_view to_string(Mode m) { return m == Mode::kHonest ? "honest" : "malicious"; }

std::string_view to_string(PaymentRule r) {
  return r == PaymentRule::kFirstPrice ? "first-price" : "second-price";
}

Mode mode_from_string(std::string_view s) {
  if (s == "honest") return Mode::kHonest;
  if (s == "malicious") return Mode::kMalicious;
  throw ConfigError("unknown mode '" + std::string(s) + "' (expected honest or malicious)");
}

PaymentRule payment_rule_from_string(std::string_view s) {
  if (s == "first-price") return PaymentRule::kFirstPrice;
  if (s == "second-price") return PaymentRule::kSecondPrice;
  throw ConfigError("unknown payment rule '" + std::string(s) +
                    "' (expected first-price or second-price)");
}

std::string_view to_string(DropStage s) {
  switch (s) {
    case DropStage::kBeforeOt:
      return "before_ot";
    case DropStage::kAfterOt:
      return "after_ot";
    case DropStage::kAfterSharing:
      return "after_sharing";
  }
  return "?";
}

DropStage drop_stage_from_string(std::string_view s) {
  if (s == "before_ot") return DropStage::kBeforeOt;
  if (s == "after_ot") return DropStage::kAfterOt;
  if (s == "after_sharing") return DropStage::kAfterSharing;
  throw MalformedMessage("unknown dropout stage '" + std::string(s) + "'");
}

AuctionConfig::AuctionConfig(GroupParams params_in, PriceTable prices_in, std::size_t n_in)
    : params(std::move(params_in)), prices(std::move(prices_in)), n(n_in) {}

void AuctionConfig::validate() const {
  params.validate();
  if (n < 2) throw ParameterError("an auction needs at least 2 bidders");
  if (fixed.codes) {
    if (fixed.codes->size() != k()) throw ParameterError("fixed codes must list one code per price");
    CodeBook(*fixed.codes, params.q);
  }
  if (fixed.randomizers) {
    if (fixed.randomizers->size() != n) {
      throw ParameterError("fixed randomizers must list one value per bidder");
    }
    std::vector<Scalar> r;
    for (const auto& x : *fixed.randomizers) r.emplace_back(x);
    RandomizerSet(std::move(r), params);
  }
  if (fixed.shares) {
    if (fixed.shares->size() != n) throw ParameterError("fixed shares must have n rows");
    for (const auto& row : *fixed.shares) {
      if (row.size() != n) throw ParameterError("fixed share rows must have n entries");
      for (const auto& d : row) {
        if (!params.is_scalar(d)) throw ParameterError("fixed share outside [0, q)");
      }
    }
  }
}

Rng AuctionConfig::rng_for(const RoleId& role) const {
  auto it = role_seeds.find(role);
  if (it != role_seeds.end()) return Rng(it->second);
  return Rng(seed).derive(role);
}

bool code_complaint_admissible(const std::vector<Message>& board, const RoleId& bidder) {
  for (const auto& msg : board) {
    if (msg.kind == kind::kOtAck && msg.from == bidder && msg.body.value("verdict", "") == "ACC") {
      return false;
    }
  }
  return true;
}

}  // namespace kauction
