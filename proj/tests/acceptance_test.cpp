// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kauction/config.hpp"
#include "kauction/errors.hpp"
#include "oracles.hpp"

namespace {

using namespace kauction;

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

const GroupParams& group64() {
  static const GroupParams params = generate_group_params(64, "acceptance");
  return params;
}

RunSpec golden(Mode mode) {
  RunSpec spec = parse_run_config(golden_config());
  spec.config.mode = mode;
  return spec;
}

std::vector<Money> random_prices(std::size_t k, Rng& rng) {
  std::vector<Money> prices;
  Money p = 0;
  for (std::size_t i = 0; i < k; ++i) {
    p += 1 + rng.index_below(50);
    prices.push_back(p);
  }
  return prices;
}

std::vector<std::size_t> distinct_choices(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i + 1;
  shuffle(all, rng);
  all.resize(n);
  return all;
}

AuctionConfig random_config(std::size_t n, std::size_t k, Mode mode, Rng& rng, const std::string& seed) {
  AuctionConfig config(group64(), PriceTable(random_prices(k, rng)), n);
  config.mode = mode;
  config.seed = seed;
  return config;
}

std::vector<int> bits(const Outcome& o) { return o.winner().flags.bits(); }

std::string describe(const Outcome& o) {
  if (!o.aborted()) return "winner " + o.winner().winner;
  return "aborted " + std::string(to_string(o.abort().reason)) + ": " + o.abort().detail;
}

// Criterion 1.
Verdict golden_replay() {
  Verdict v;
  for (Mode mode : {Mode::kHonest, Mode::kMalicious}) {
    RunSpec spec = golden(mode);
    Bus bus(spec.config.n, {});
    AuctionEngine engine(spec.config, honest_participants(spec.config), bus);
    Outcome o = engine.run(spec.bids);
    v.require(!o.aborted(), describe(o));
    if (!v.ok) return v;
    std::vector<long> codes, sigmas;
    for (std::size_t j = 1; j <= 4; ++j) codes.push_back(engine.bidder(j).code()->value.get_si());
    for (const auto& [j, s] : engine.seller().sigmas()) sigmas.push_back(s.value.get_si());
    v.require(codes == std::vector<long>{710, 103, 221, 111}, "randomized codes differ");
    v.require(sigmas == std::vector<long>{290, 535, 294, 26}, "sigmas differ");
    v.require(engine.seller().sigma_k()->value == 394, "sigma_k differs");
    v.require(bits(o) == std::vector<int>{1, 0, 1, 1, 0, 0, 0, 1}, "flags differ");
    v.require(o.winner().highest == 80 && o.winner().second == std::optional<Money>(40), "prices differ");
    v.require(o.winner().winner == "B4", "winner differs");
  }
  return v;
}

// Criterion 2.
Verdict oracle_equivalence() {
  Verdict v;
  Rng rng("oracle-equivalence");
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    // Distinct bids need n <= k, so k = 1 never qualifies.
    std::size_t k = 2 + rng.index_below(11);
    std::size_t n = 2 + rng.index_below(std::min<std::size_t>(8, k) - 1);
    Mode mode = trial % 2 == 0 ? Mode::kHonest : Mode::kMalicious;
    AuctionConfig config = random_config(n, k, mode, rng, "eq-" + std::to_string(trial));
    BidPlan plan{distinct_choices(n, k, rng), {}};
    RunResult r = run_auction(config, plan);
    bool ok = !r.outcome.aborted() && bits(r.outcome) == oracle::indicator(plan.choices, k) &&
              r.outcome.winner().highest == config.prices.prices().at(oracle::max_choice(plan.choices) - 1);
    if (!ok) {
      if (++mismatches == 1) v.note = "trial " + std::to_string(trial) + ": " + describe(r.outcome);
    }
  }
  if (mismatches > 0) {
    v.ok = false;
    v.note = std::to_string(mismatches) + " mismatches; first " + v.note;
  }
  return v;
}

// Criterion 3.
Verdict knapsack_round_trip() {
  Verdict v;
  const GroupParams& params = group64();
  Rng rng("knapsack-round-trip");
  std::size_t unsolvable = 0;
  for (std::size_t k = 1; k <= 12 && v.ok; ++k) {
    for (int book_no = 0; book_no < 4 && v.ok; ++book_no) {
      CodeBook book = generate_codes(k, params.q, rng);
      std::vector<std::uint64_t> codes;
      for (std::size_t i = 0; i < k; ++i) codes.push_back(book.code(i).get_ui());
      auto sums = oracle::subset_sums(codes);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        FlagVector flags(k);
        for (std::size_t i = 0; i < k; ++i) flags.set(i, (mask >> i & 1) != 0);
        if (solve(book, encode(book, flags)) != flags) {
          v.require(false, "round trip failed for k=" + std::to_string(k));
          break;
        }
      }
      // Random values plus near misses next to reachable sums.
      std::vector<BigInt> probes;
      for (int i = 0; i < 200; ++i) probes.push_back(rng.uniform_below(params.q));
      for (const auto& [s, unused] : sums) probes.push_back(BigInt(std::to_string(s + 1)));
      for (const BigInt& x : probes) {
        if (x >= params.q || sums.count(x.get_ui())) continue;
        ++unsolvable;
        bool threw = false;
        try {
          solve(book, Scalar(x));
        } catch (const UnsolvableKnapsack&) {
          threw = true;
        }
        if (!threw) {
          v.require(false, "unreachable value " + to_decimal(x) + " decoded");
          break;
        }
      }
    }
  }
  if (v.ok) v.note = std::to_string(unsolvable) + " unreachable values rejected";
  return v;
}

// Criterion 4.
Verdict ot_correctness() {
  Verdict v;
  const GroupParams& params = group64();
  Rng rng("ot-correctness");
  int failures = 0;
  for (std::size_t k : {1, 2, 8, 32}) {
    for (std::size_t choice = 1; choice <= k; ++choice) {
      for (int t = 0; t < 20; ++t) {
        std::vector<Bytes> messages(k, Bytes(24));
        for (auto& m : messages) rng.fill(m);
        auto [req, state] = ot_request(choice, k, params, rng);
        OtResponse resp = ot_respond(messages, req, params, rng);
        if (ot_recover(resp, state, params) != messages[choice - 1]) ++failures;
      }
    }
  }
  v.require(failures == 0, std::to_string(failures) + " transfers recovered the wrong string");
  return v;
}

struct Deviation {
  std::string name;
  AdversaryScript script;
  std::string check;
  RoleId culprit;
};

AdversaryRule mutate(std::string kind, RoleId from, std::optional<RoleId> to, std::string path, Json value) {
  AdversaryRule r;
  r.match.kind = std::move(kind);
  r.match.from = std::move(from);
  r.match.to = std::move(to);
  r.action = RuleAction::kMutate;
  r.path = std::move(path);
  r.value = std::move(value);
  return r;
}

std::vector<Deviation> deviation_matrix() {
  std::vector<Deviation> out;
  AdversaryScript wrong_slot;
  wrong_slot.seller_fault = SellerFault{std::make_pair(std::size_t{3}, std::size_t{4}), std::nullopt};
  out.push_back({"wrong OT slot", wrong_slot, "ot-code", "S"});
  AdversaryScript forged;
  forged.bidder_faults[2] = BidderFault{true, false};
  out.push_back({"forged zeta", forged, "zeta-membership", "B2"});
  AdversaryScript share;
  share.rules.push_back(mutate("share", "B2", "B3", "/d", "45"));
  out.push_back({"mutated share", share, "share", "B2"});
  AdversaryScript sigma;
  sigma.rules.push_back(mutate("sigma", "B1", std::nullopt, "/sigma", "295"));
  out.push_back({"wrong sigma", sigma, "sigma", "B1"});
  AdversaryScript flags;
  flags.rules.push_back(mutate("result", "S", std::nullopt, "/flags/6", "1"));
  out.push_back({"lying flags", flags, "proof2", "S"});
  return out;
}

// Criterion 5.
Verdict detection_matrix() {
  Verdict v;
  RunSpec mal = golden(Mode::kMalicious);
  RunSpec hon = golden(Mode::kHonest);
  std::ostringstream summary;
  for (const Deviation& d : deviation_matrix()) {
    RunResult r = run_auction(mal.config, mal.bids, d.script);
    bool named = !r.outcome.incidents.empty() && r.outcome.incidents.front().check == d.check &&
                 r.outcome.incidents.front().culprit == d.culprit;
    v.require(named, d.name + " not detected at " + d.check + " with culprit " + d.culprit);
    v.require(!verify_transcript(r.transcript, mal.config).passed(), d.name + " passes verification");
    RunResult h = run_auction(hon.config, hon.bids, d.script);
    v.require(h.outcome.incidents.empty(), d.name + " detected in honest mode");
    summary << d.name << "->" << d.check << "/" << d.culprit << "; ";
  }
  if (v.ok) v.note = summary.str() + "honest mode detects none";
  return v;
}

// Criterion 6.
Verdict proof_suite() {
  Verdict v;
  const GroupParams& params = group64();
  Rng rng("proof-suite");
  int complete = 0, rejected = 0, extracted = 0;
  for (int i = 0; i < 1000; ++i) {
    Scalar x(rng.uniform_below(params.q));
    EqdlStatement st{params.g_s, params.g_b, pow_mod(params, params.g_s, x), pow_mod(params, params.g_b, x)};
    EqdlCommitment c = eqdl_commit(params, st, rng);
    Scalar omega(rng.uniform_below(params.q));
    Scalar r = eqdl_respond(params, c.nonce, x, omega);
    if (eqdl_verify(params, st, {c.commit_a, c.commit_b, omega, r})) ++complete;
    Scalar bad = add_mod(params, r, Scalar(params.scalar(rng.uniform_below(params.q - 1) + 1)));
    if (!eqdl_verify(params, st, {c.commit_a, c.commit_b, omega, bad})) ++rejected;

    Scalar omega2 = add_mod(params, omega, Scalar(params.scalar(rng.uniform_below(params.q - 1) + 1)));
    Scalar r2 = eqdl_respond(params, c.nonce, x, omega2);
    if (!eqdl_verify(params, st, {c.commit_a, c.commit_b, omega2, r2})) continue;
    BigInt dr = r.value - r2.value;
    BigInt dc = omega.value - omega2.value;
    dc %= params.q;
    if (dc < 0) dc += params.q;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), dc.get_mpz_t(), params.q.get_mpz_t());
    BigInt w = dr * inv % params.q;
    if (w < 0) w += params.q;
    if (w == x.value) ++extracted;
  }
  v.require(complete == 1000, "completeness " + std::to_string(complete) + "/1000");
  v.require(rejected == 1000, "perturbed responses rejected " + std::to_string(rejected) + "/1000");
  v.require(extracted == 1000, "extractor recovered " + std::to_string(extracted) + "/1000");
  return v;
}

std::ptrdiff_t first_of(const Transcript& t, std::string_view kind) {
  auto it = std::find_if(t.begin(), t.end(), [&](const TranscriptRecord& r) { return r.message.kind == kind; });
  return it == t.end() ? -1 : it - t.begin();
}

// Criterion 7.
Verdict tie_handling() {
  Verdict v;
  Rng rng("ties");
  int resolved = 0, aborted = 0, unsolvable = 0;
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    std::size_t k = 3 + rng.index_below(10);
    std::size_t n = 2 + rng.index_below(std::min<std::size_t>(8, k) - 2);
    std::vector<std::size_t> choices = distinct_choices(n, k, rng);
    std::size_t a = rng.index_below(n), b = (a + 1 + rng.index_below(n - 1)) % n;
    choices[b] = choices[a];
    std::set<std::size_t> taken(choices.begin(), choices.end());
    std::vector<std::size_t> free;
    for (std::size_t i = 1; i <= k; ++i) {
      if (!taken.count(i)) free.push_back(i);
    }
    std::string tag = "trial " + std::to_string(trial);

    AuctionConfig mal = random_config(n, k, Mode::kMalicious, rng, "tie-" + std::to_string(trial));
    BidPlan plan{choices, {}};
    // Half the runs give the second bidder a way out on a later round.
    bool escape = trial % 2 == 0;
    std::vector<std::size_t> final_choices = choices;
    if (escape) {
      std::size_t rounds = 1 + rng.index_below(AuctionEngine::kMaxTieRounds);
      std::vector<std::size_t> rebids(rounds - 1, choices[a]);
      rebids.push_back(free[rng.index_below(free.size())]);
      plan.rebids[b + 1] = rebids;
      final_choices[b] = rebids.back();
    }
    RunResult r = run_auction(mal, plan);
    std::ptrdiff_t tie_at = first_of(r.transcript, kind::kRerandomize);
    std::ptrdiff_t share_at = first_of(r.transcript, kind::kShare);
    v.require(tie_at >= 0 && (share_at < 0 || tie_at < share_at), tag + ": tie not detected before sharing");
    if (escape) {
      v.require(!r.outcome.aborted() && bits(r.outcome) == oracle::indicator(final_choices, k),
                tag + ": re-bid run " + describe(r.outcome));
      v.require(r.outcome.tie_rounds <= AuctionEngine::kMaxTieRounds, tag + ": too many rounds");
      ++resolved;
    } else {
      v.require(r.outcome.aborted() && r.outcome.abort().reason == AbortReason::kTieUnresolved &&
                    r.outcome.tie_rounds == AuctionEngine::kMaxTieRounds && share_at < 0,
                tag + ": persistent tie " + describe(r.outcome));
      ++aborted;
    }

    AuctionConfig hon = random_config(n, k, Mode::kHonest, rng, "tie-h-" + std::to_string(trial));
    RunResult h = run_auction(hon, BidPlan{choices, {}});
    v.require(h.outcome.aborted() && h.outcome.abort().reason == AbortReason::kUnsolvableKnapsack,
              tag + ": honest tie " + describe(h.outcome));
    ++unsolvable;
  }
  RunSpec toy = golden(Mode::kHonest);
  toy.bids.choices = {1, 1, 4, 8};
  RunResult t = run_auction(toy.config, toy.bids);
  v.require(t.outcome.aborted() && t.outcome.abort().reason == AbortReason::kUnsolvableKnapsack,
            "toy honest tie " + describe(t.outcome));
  if (v.ok) {
    v.note = std::to_string(resolved) + " resolved, " + std::to_string(aborted) + " aborted after " +
             std::to_string(AuctionEngine::kMaxTieRounds) + " rounds, " + std::to_string(unsolvable + 1) +
             " honest ties unsolvable";
  }
  return v;
}

// Criterion 8.
Verdict dropout_cases() {
  Verdict v;
  Rng rng("dropouts");
  struct Stage {
    std::string name;
    std::function<Phase(Mode)> before;
  };
  std::vector<Stage> stages = {
      {"before OT", [](Mode) { return Phase::kOt; }},
      {"after OT", [](Mode m) { return m == Mode::kMalicious ? Phase::kCommit : Phase::kSharing; }},
      {"after sharing", [](Mode) { return Phase::kSolve; }},
  };
  int runs = 0;
  for (const Stage& stage : stages) {
    for (int trial = 0; trial < 60 && v.ok; ++trial) {
      Mode mode = trial % 2 == 0 ? Mode::kHonest : Mode::kMalicious;
      std::size_t k = 3 + rng.index_below(10);
      std::size_t n = 3 + rng.index_below(std::min<std::size_t>(8, k) - 2);
      AuctionConfig config = random_config(n, k, mode, rng, "drop-" + stage.name + std::to_string(trial));
      BidPlan plan{distinct_choices(n, k, rng), {}};
      std::size_t gone = 1 + rng.index_below(n);
      AdversaryScript script;
      script.dropouts.push_back({bidder_id(gone), stage.before(mode)});
      RunResult r = run_auction(config, plan, script);
      std::vector<std::size_t> rest;
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != gone) rest.push_back(plan.choices[j - 1]);
      }
      std::string tag = stage.name + " trial " + std::to_string(trial);
      v.require(!r.outcome.aborted(), tag + ": " + describe(r.outcome));
      if (!v.ok) break;
      v.require(bits(r.outcome) == oracle::indicator(rest, k), tag + ": flags differ from survivors");
      v.require(r.outcome.winner().highest == config.prices.prices().at(oracle::max_choice(rest) - 1),
                tag + ": highest price differs");
      ++runs;
    }
    for (Mode mode : {Mode::kHonest, Mode::kMalicious}) {
      AuctionConfig pair(group64(), PriceTable({10, 20, 30}), 2);
      pair.mode = mode;
      AdversaryScript script;
      script.dropouts.push_back({"B2", stage.before(mode)});
      RunResult r = run_auction(pair, BidPlan{{1, 3}, {}}, script);
      v.require(r.outcome.aborted() && r.outcome.abort().reason == AbortReason::kTooFewBidders,
                stage.name + " with two bidders: " + describe(r.outcome));
    }
  }
  if (v.ok) v.note = std::to_string(runs) + " runs match the survivors; n=2 drops abort";
  return v;
}

// Criterion 9.
Verdict determinism() {
  Verdict v;
  Rng rng("determinism");
  auto twice = [&](const AuctionConfig& config, const BidPlan& plan, const AdversaryScript& script,
                   bool honest, const std::string& tag) {
    RunResult a = run_auction(config, plan, script);
    RunResult b = run_auction(config, plan, script);
    v.require(to_jsonl(a.transcript) == to_jsonl(b.transcript), tag + ": transcripts differ");
    v.require(parse_transcript(to_jsonl(a.transcript)) == a.transcript, tag + ": round trip differs");
    if (honest) {
      VerificationReport rep = verify_transcript(a.transcript, config);
      std::string failed;
      for (const auto& c : rep.checks) {
        if (!c.passed()) failed += c.name + " ";
      }
      v.require(rep.passed(), tag + ": honest transcript fails " + failed);
    }
  };
  for (Mode mode : {Mode::kHonest, Mode::kMalicious}) {
    RunSpec spec = golden(mode);
    twice(spec.config, spec.bids, {}, true, "golden");
    for (const Deviation& d : deviation_matrix()) twice(spec.config, spec.bids, d.script, false, d.name);
  }
  int honest = 0;
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    std::size_t k = 2 + rng.index_below(11);
    std::size_t n = 2 + rng.index_below(std::min<std::size_t>(8, k) - 1);
    Mode mode = trial % 2 == 0 ? Mode::kHonest : Mode::kMalicious;
    AuctionConfig config = random_config(n, k, mode, rng, "det-" + std::to_string(trial));
    BidPlan plan{distinct_choices(n, k, rng), {}};
    AdversaryScript script;
    if (trial % 5 == 0 && n > 2) script.dropouts.push_back({bidder_id(1 + rng.index_below(n)), Phase::kSolve});
    twice(config, plan, script, true, "random trial " + std::to_string(trial));
    ++honest;
  }
  if (v.ok) v.note = std::to_string(honest + 2) + " honest transcripts verified";
  return v;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict()> run;
  double budget_ms;  // 0: untimed
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "golden replay", golden_replay, 1000},
      {2, "oracle equivalence", oracle_equivalence, 30000},
      {3, "knapsack round trip", knapsack_round_trip, 60000},
      {4, "OT correctness", ot_correctness, 0},
      {5, "detection matrix", detection_matrix, 0},
      {6, "proof suite", proof_suite, 0},
      {7, "tie handling", tie_handling, 0},
      {8, "dropout cases", dropout_cases, 0},
      {9, "determinism", determinism, 0},
  };
  group64();
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_ms > 0 && ms > c.budget_ms && v.ok) {
      v.ok = false;
      v.note = "over the time budget";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.0f ms", ms);
    std::cout << (v.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << timing;
    if (c.budget_ms > 0) std::cout << ", budget " << c.budget_ms << " ms";
    std::cout << ")";
    if (!v.note.empty()) std::cout << ": " << v.note;
    std::cout << std::endl;
    if (!v.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
