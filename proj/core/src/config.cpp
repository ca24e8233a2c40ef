#include "kauction/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kauction/errors.hpp"

namespace kauction {

namespace {

void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be an object");
  for (const auto& [key, unused] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + std::string(where));
  }
}

const Json& require(const Json& obj, std::string_view key, std::string_view where) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ConfigError(std::string(where) + " is missing '" + std::string(key) + "'");
  return *it;
}

std::string as_string(const Json& v, std::string_view what) {
  if (!v.is_string()) throw ConfigError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

// Accepts a JSON integer or a decimal string.
BigInt as_big(const Json& v, std::string_view what) {
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
  if (v.is_string()) {
    try {
      return from_decimal(v.get<std::string>());
    } catch (const MalformedMessage&) {
    }
  }
  throw ConfigError(std::string(what) + " must be a non-negative integer");
}

std::uint64_t as_u64(const Json& v, std::string_view what) {
  BigInt x = as_big(v, what);
  if (!x.fits_ulong_p()) throw ConfigError(std::string(what) + " is too large");
  return x.get_ui();
}

std::vector<BigInt> as_big_list(const Json& v, std::string_view what) {
  if (!v.is_array()) throw ConfigError(std::string(what) + " must be a list");
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(as_big(x, what));
  return out;
}

bool as_bool(const Json& v, std::string_view what) {
  if (!v.is_boolean()) throw ConfigError(std::string(what) + " must be true or false");
  return v.get<bool>();
}

Phase as_phase(const Json& v, std::string_view what) {
  try {
    return phase_from_string(as_string(v, what));
  } catch (const MalformedMessage&) {
    throw ConfigError(std::string(what) + ": unknown phase '" + v.get<std::string>() + "'");
  }
}

std::size_t as_bidder(const std::string& id, std::size_t n, std::string_view what) {
  auto j = bidder_index(id);
  if (!j || *j > n) throw ConfigError(std::string(what) + ": unknown bidder '" + id + "'");
  return *j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

GroupParams parse_group(const Json& g, const std::filesystem::path& base_dir) {
  if (g.is_string()) {
    if (g.get<std::string>() == "toy") return toy_group_params();
    throw ConfigError("group must be \"toy\" or an object");
  }
  if (!g.is_object()) throw ConfigError("group must be \"toy\" or an object");
  if (g.contains("generate")) {
    check_keys(g, {"generate"}, "group");
    const Json& gen = g["generate"];
    check_keys(gen, {"q_bits", "seed"}, "group.generate");
    auto bits = as_u64(require(gen, "q_bits", "group.generate"), "group.generate.q_bits");
    auto seed = as_string(require(gen, "seed", "group.generate"), "group.generate.seed");
    return generate_group_params(static_cast<unsigned>(bits), seed);
  }
  if (g.contains("file")) {
    check_keys(g, {"file"}, "group");
    std::filesystem::path file = as_string(g["file"], "group.file");
    if (file.is_relative()) file = base_dir / file;
    return params_from_json(read_json_file(file));
  }
  return params_from_json(g);
}

BidPlan parse_bids(const Json& doc, std::size_t n, std::size_t k) {
  BidPlan plan;
  const Json& bids = require(doc, "bids", "config");
  if (bids.is_string()) {
    std::string spec = bids.get<std::string>();
    if (spec.rfind("random:", 0) != 0) throw ConfigError("bids must be a list or \"random:<seed>\"");
    Rng rng(spec.substr(7));
    if (n <= k) {
      // Distinct prices whenever there are enough to go round.
      std::vector<std::size_t> all(k);
      for (std::size_t i = 0; i < k; ++i) all[i] = i + 1;
      shuffle(all, rng);
      plan.choices.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
      for (std::size_t j = 0; j < n; ++j) plan.choices.push_back(1 + rng.index_below(k));
    }
  } else if (bids.is_array()) {
    for (const auto& b : bids) plan.choices.push_back(static_cast<std::size_t>(as_u64(b, "bid")));
    if (plan.choices.size() != n) {
      throw ConfigError("bids lists " + std::to_string(plan.choices.size()) + " entries but n is " +
                        std::to_string(n));
    }
  } else {
    throw ConfigError("bids must be a list or \"random:<seed>\"");
  }
  for (std::size_t c : plan.choices) {
    if (c < 1 || c > k) throw ConfigError("bid " + std::to_string(c) + " outside [1, " + std::to_string(k) + "]");
  }
  if (doc.contains("rebids")) {
    const Json& rebids = doc["rebids"];
    if (!rebids.is_object()) throw ConfigError("rebids must be an object");
    for (const auto& [id, list] : rebids.items()) {
      std::size_t j = as_bidder(id, n, "rebids");
      if (!list.is_array()) throw ConfigError("rebids." + id + " must be a list");
      for (const auto& c : list) {
        auto v = static_cast<std::size_t>(as_u64(c, "rebid"));
        if (v < 1 || v > k) throw ConfigError("rebid " + std::to_string(v) + " outside the price list");
        plan.rebids[j].push_back(v);
      }
    }
  }
  return plan;
}

AdversaryScript parse_adversary(const Json& adv, const AuctionConfig& config) {
  AdversaryScript script;
  check_keys(adv, {"rules", "corrupt", "dropouts"}, "adversary");
  if (adv.contains("rules")) {
    const Json& rules = adv["rules"];
    if (!rules.is_array()) throw ConfigError("adversary.rules must be a list");
    for (const auto& r : rules) {
      check_keys(r, {"match", "action", "path", "value", "participant", "repeat"}, "adversary rule");
      AdversaryRule rule;
      if (r.contains("match")) {
        const Json& m = r["match"];
        check_keys(m, {"phase", "from", "to", "kind"}, "adversary rule match");
        if (m.contains("phase")) rule.match.phase = as_phase(m["phase"], "match.phase");
        if (m.contains("from")) rule.match.from = as_string(m["from"], "match.from");
        if (m.contains("to")) rule.match.to = as_string(m["to"], "match.to");
        if (m.contains("kind")) rule.match.kind = as_string(m["kind"], "match.kind");
      }
      rule.action = rule_action_from_string(as_string(require(r, "action", "adversary rule"), "action"));
      if (r.contains("path")) rule.path = as_string(r["path"], "path");
      if (r.contains("value")) rule.value = r["value"];
      if (r.contains("participant")) rule.participant = as_string(r["participant"], "participant");
      if (r.contains("repeat")) rule.repeat = as_bool(r["repeat"], "repeat");
      if ((rule.action == RuleAction::kMutate || rule.action == RuleAction::kReplacePayload) &&
          !r.contains("value")) {
        throw ConfigError("adversary rule with action " + std::string(to_string(rule.action)) +
                          " needs a value");
      }
      script.rules.push_back(std::move(rule));
    }
  }
  if (adv.contains("corrupt")) {
    const Json& corrupt = adv["corrupt"];
    if (!corrupt.is_object()) throw ConfigError("adversary.corrupt must be an object");
    for (const auto& [id, spec] : corrupt.items()) {
      if (id == kSeller) {
        check_keys(spec, {"swap_ot_slots", "extra_flag"}, "adversary.corrupt.S");
        SellerFault fault;
        if (spec.contains("swap_ot_slots")) {
          const Json& s = spec["swap_ot_slots"];
          if (!s.is_array() || s.size() != 2) throw ConfigError("swap_ot_slots must list two slots");
          fault.swap_ot_slots = std::make_pair(static_cast<std::size_t>(as_u64(s[0], "slot")),
                                               static_cast<std::size_t>(as_u64(s[1], "slot")));
        }
        if (spec.contains("extra_flag")) {
          fault.extra_flag = static_cast<std::size_t>(as_u64(spec["extra_flag"], "extra_flag"));
        }
        script.seller_fault = fault;
      } else {
        std::size_t j = as_bidder(id, config.n, "adversary.corrupt");
        check_keys(spec, {"forge_zeta", "false_claim"}, "adversary.corrupt." + id);
        BidderFault fault;
        if (spec.contains("forge_zeta")) fault.forge_zeta = as_bool(spec["forge_zeta"], "forge_zeta");
        if (spec.contains("false_claim")) fault.false_claim = as_bool(spec["false_claim"], "false_claim");
        script.bidder_faults[j] = fault;
      }
    }
  }
  if (adv.contains("dropouts")) {
    const Json& drops = adv["dropouts"];
    if (!drops.is_array()) throw ConfigError("adversary.dropouts must be a list");
    for (const auto& d : drops) {
      check_keys(d, {"bidder", "before"}, "dropout");
      ScheduledDropout drop;
      drop.bidder = as_string(require(d, "bidder", "dropout"), "dropout.bidder");
      as_bidder(drop.bidder, config.n, "dropout");
      drop.before = as_phase(require(d, "before", "dropout"), "dropout.before");
      if (drop.before != Phase::kOt && drop.before != Phase::kCommit && drop.before != Phase::kSharing &&
          drop.before != Phase::kSolve) {
        throw ConfigError("dropout.before must be ot, commit, sharing or solve");
      }
      script.dropouts.push_back(drop);
    }
  }
  script.validate(config);
  return script;
}

}  // namespace

Json params_to_json(const GroupParams& params) {
  Json out = Json::object();
  out["p"] = to_decimal(params.p);
  out["q"] = to_decimal(params.q);
  out["mu"] = to_decimal(params.mu);
  out["g_s"] = to_decimal(params.g_s.value);
  out["g_b"] = to_decimal(params.g_b.value);
  out["g_ot"] = to_decimal(params.g_ot.value);
  out["h_ot"] = to_decimal(params.h_ot.value);
  return out;
}

GroupParams params_from_json(const Json& doc) {
  check_keys(doc, {"p", "q", "mu", "g_s", "g_b", "g_ot", "h_ot"}, "group parameters");
  GroupParams params;
  params.p = as_big(require(doc, "p", "group parameters"), "p");
  params.q = as_big(require(doc, "q", "group parameters"), "q");
  params.mu = as_big(require(doc, "mu", "group parameters"), "mu");
  params.g_s = GroupElement(as_big(require(doc, "g_s", "group parameters"), "g_s"));
  params.g_b = GroupElement(as_big(require(doc, "g_b", "group parameters"), "g_b"));
  params.g_ot = GroupElement(as_big(require(doc, "g_ot", "group parameters"), "g_ot"));
  params.h_ot = GroupElement(as_big(require(doc, "h_ot", "group parameters"), "h_ot"));
  params.validate();
  return params;
}

RunSpec parse_run_config(const Json& doc, const std::filesystem::path& base_dir) {
  check_keys(doc,
             {"mode", "payment_rule", "group", "prices", "n", "bids", "rebids", "seeds", "fixed", "adversary"},
             "config");
  try {
    GroupParams params = parse_group(require(doc, "group", "config"), base_dir);
    const Json& prices_json = require(doc, "prices", "config");
    if (!prices_json.is_array()) throw ConfigError("prices must be a list");
    std::vector<Money> prices;
    for (const auto& p : prices_json) prices.push_back(as_u64(p, "price"));
    auto n = static_cast<std::size_t>(as_u64(require(doc, "n", "config"), "n"));

    AuctionConfig config(std::move(params), PriceTable(std::move(prices)), n);
    if (doc.contains("mode")) config.mode = mode_from_string(as_string(doc["mode"], "mode"));
    if (doc.contains("payment_rule")) {
      config.payment_rule = payment_rule_from_string(as_string(doc["payment_rule"], "payment_rule"));
    }
    if (doc.contains("seeds")) {
      const Json& seeds = doc["seeds"];
      if (!seeds.is_object()) throw ConfigError("seeds must be an object");
      for (const auto& [role, value] : seeds.items()) {
        if (role == "master") {
          config.seed = as_string(value, "seeds.master");
        } else if (role == kSeller || bidder_index(role)) {
          if (role != kSeller) as_bidder(role, n, "seeds");
          config.role_seeds[role] = as_string(value, "seeds." + role);
        } else {
          throw ConfigError("unknown key '" + role + "' in seeds");
        }
      }
    }
    if (doc.contains("fixed")) {
      const Json& fixed = doc["fixed"];
      check_keys(fixed, {"codes", "randomizers", "shares"}, "fixed");
      if (fixed.contains("codes")) config.fixed.codes = as_big_list(fixed["codes"], "fixed.codes");
      if (fixed.contains("randomizers")) {
        config.fixed.randomizers = as_big_list(fixed["randomizers"], "fixed.randomizers");
      }
      if (fixed.contains("shares")) {
        const Json& rows = fixed["shares"];
        if (!rows.is_array()) throw ConfigError("fixed.shares must be a list of rows");
        std::vector<std::vector<BigInt>> shares;
        for (const auto& row : rows) shares.push_back(as_big_list(row, "fixed.shares"));
        config.fixed.shares = std::move(shares);
      }
    }
    config.validate();
    BidPlan bids = parse_bids(doc, n, config.k());
    AdversaryScript script;
    if (doc.contains("adversary")) script = parse_adversary(doc["adversary"], config);
    return RunSpec{std::move(config), std::move(bids), std::move(script)};
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
}

RunSpec load_run_config(const std::filesystem::path& path) {
  Json doc = read_json_file(path);
  return parse_run_config(doc, path.parent_path().empty() ? "." : path.parent_path());
}

Json golden_config() {
  return Json::parse(R"({
  "mode": "honest",
  "payment_rule": "second-price",
  "group": "toy",
  "prices": [10, 20, 30, 40, 50, 60, 70, 80],
  "n": 4,
  "bids": [3, 1, 4, 8],
  "seeds": {"master": "golden"},
  "fixed": {
    "codes": ["3", "5", "10", "21", "40", "90", "180", "360"],
    "randomizers": ["700", "100", "200", "502"],
    "shares": [
      ["100", "400", "200", "10"],
      ["10", "50", "40", "3"],
      ["150", "50", "19", "2"],
      ["30", "35", "35", "11"]
    ]
  }
})");
}

}  // namespace kauction
