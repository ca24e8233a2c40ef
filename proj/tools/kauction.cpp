#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kauction/config.hpp"
#include "kauction/errors.hpp"

namespace {

using namespace kauction;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAborted = 2;
constexpr int kExitVerifyFailed = 3;

constexpr const char* kUnit = "units";

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  if (!out) throw ConfigError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int report(const RunResult& result) {
  const Outcome& o = result.outcome;
  for (const auto& inc : o.incidents) {
    std::cout << "incident check=" << inc.check << " culprit=" << inc.culprit << " reporter=" << inc.reporter
              << " phase=" << to_string(inc.phase) << "\n";
  }
  for (const auto& d : o.dropped) std::cout << "dropped " << d << "\n";
  if (o.tie_rounds > 0) std::cout << "tie_rounds=" << o.tie_rounds << "\n";
  if (o.aborted()) {
    const AbortOutcome& a = o.abort();
    std::cout << "aborted reason=" << to_string(a.reason);
    if (a.culprit) std::cout << " culprit=" << *a.culprit;
    std::cout << "\n" << a.detail << "\n";
    return kExitAborted;
  }
  const WinnerOutcome& w = o.winner();
  std::cout << "highest=" << w.highest;
  if (w.second) std::cout << " second=" << *w.second;
  std::cout << " winner=" << w.winner << "\n";
  std::cout << "paid=" << w.paid << " " << kUnit << "\n";
  return kExitOk;
}

int run_spec(const RunSpec& spec, const std::string& transcript_out) {
  RunResult result = run_auction(spec.config, spec.bids, spec.script);
  if (!transcript_out.empty()) write_file(transcript_out, to_jsonl(result.transcript));
  return report(result);
}

int cmd_gen_params(unsigned q_bits, const std::string& seed, const std::string& out) {
  GroupParams params = generate_group_params(q_bits, seed);
  write_file(out, params_to_json(params).dump(2) + "\n");
  std::cout << "q=" << to_decimal(params.q) << "\np=" << to_decimal(params.p) << "\n";
  return kExitOk;
}

int cmd_run(const std::string& config_path, const std::string& transcript_out, const std::string& mode) {
  RunSpec spec = load_run_config(config_path);
  if (!mode.empty()) {
    spec.config.mode = mode_from_string(mode);
    spec.script.validate(spec.config);
  }
  return run_spec(spec, transcript_out);
}

int cmd_verify(const std::string& transcript_path, const std::string& config_path, const std::string& mode) {
  RunSpec spec = load_run_config(config_path);
  if (!mode.empty()) spec.config.mode = mode_from_string(mode);
  Transcript transcript = parse_transcript(read_file(transcript_path));
  VerificationReport rep = verify_transcript(transcript, spec.config);
  for (const auto& check : rep.checks) {
    std::cout << (check.passed() ? "PASS " : "FAIL ") << check.name << "\n";
    for (const auto& f : check.failures) std::cout << "  seq " << f.seq << ": " << f.detail << "\n";
  }
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_golden(const std::string& config_out, const std::string& transcript_out) {
  Json doc = golden_config();
  if (!config_out.empty()) write_file(config_out, doc.dump(2) + "\n");
  return run_spec(parse_run_config(doc), transcript_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sealed-bid auction resolved by the bidders, with a deterministic simulator"};
  app.require_subcommand(1);

  unsigned q_bits = 0;
  std::string seed, out;
  auto* gen = app.add_subcommand("gen-params", "Generate a prime-order group and write it as JSON");
  gen->add_option("--q-bits", q_bits, "Bit length of the subgroup order q")->required();
  gen->add_option("--seed", seed, "Seed for the deterministic search")->required();
  gen->add_option("--out", out, "Output file")->required();

  std::string config, transcript_out, mode;
  auto* run = app.add_subcommand("run", "Run the auction described by a config file");
  run->add_option("--config", config, "Run config (JSON)")->required();
  run->add_option("--transcript-out", transcript_out, "Write the transcript here");
  run->add_option("--mode", mode, "Override the mode")->check(CLI::IsMember({"honest", "malicious"}));

  std::string transcript;
  auto* verify = app.add_subcommand("verify", "Replay the public checks over a transcript");
  verify->add_option("--transcript", transcript, "Transcript file (one JSON record per line)")->required();
  verify->add_option("--config", config, "Config the transcript was produced with")->required();
  verify->add_option("--mode", mode, "Override the mode")->check(CLI::IsMember({"honest", "malicious"}));

  std::string config_out;
  auto* golden = app.add_subcommand("golden", "Run the worked four-bidder example");
  golden->add_option("--config-out", config_out, "Also write its config here");
  golden->add_option("--transcript-out", transcript_out, "Write the transcript here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen) return cmd_gen_params(q_bits, seed, out);
    if (*run) return cmd_run(config, transcript_out, mode);
    if (*verify) return cmd_verify(transcript, config, mode);
    if (*golden) return cmd_golden(config_out, transcript_out);
  } catch (const MalformedMessage& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const AuctionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
