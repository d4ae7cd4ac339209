// Copyright 2026 The mhtlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhtlp/mhtlp.h"

namespace {

using Json = nlohmann::json;

enum Exit { kAccept = 0, kReject = 1, kMalformedInput = 2, kInternal = 3 };

struct CliFailure {
  int code;
  std::string message;
};

int exit_code(mhtlp_status s) {
  switch (s) {
    case MHTLP_OK: return kAccept;
    case MHTLP_REJECT:
    case MHTLP_INTEGRITY:
    case MHTLP_MISBEHAVIOR:
    case MHTLP_DEGENERATE: return kReject;
    case MHTLP_MALFORMED:
    case MHTLP_INVALID_ARGUMENT: return kMalformedInput;
    default: return kInternal;
  }
}

void check(mhtlp_status s, const std::string& what) {
  if (s != MHTLP_OK)
    throw CliFailure{exit_code(s), what + ": " + mhtlp_status_name(s) + ": " + mhtlp_last_error()};
}

// Owns a string returned by the library.
class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { mhtlp_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? std::string(p_) : std::string(); }

 private:
  char* p_ = nullptr;
};

struct Rng {
  mhtlp_rng* h = nullptr;
  explicit Rng(std::optional<std::uint64_t> seed) {
    check(seed ? mhtlp_rng_new_seeded(*seed, &h) : mhtlp_rng_new_system(&h), "rng");
  }
  ~Rng() { mhtlp_rng_free(h); }
};

struct Field {
  mhtlp_field* h = nullptr;
  ~Field() { mhtlp_field_free(h); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kMalformedInput, "cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw CliFailure{kMalformedInput, "'" + path + "' is not valid JSON: " + e.what()};
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliFailure{kInternal, "cannot write '" + path + "'"};
  out << text << "\n";
}

void load_field(const std::string& path, Field& field) {
  check(mhtlp_field_from_json(read_file(path).c_str(), &field.h), "field '" + path + "'");
}

// Decimal (up to 2^64-1) or 0x-prefixed hex, returned as canonical hex.
std::string to_canonical_hex(std::string token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.pop_back();
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.erase(0, 1);
  if (token.rfind("0x", 0) == 0) {
    std::string h = token.substr(2);
    for (auto& c : h) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (h.empty() || h.find_first_not_of("0123456789abcdef") != std::string::npos)
      throw CliFailure{kMalformedInput, "invalid hex integer '" + token + "'"};
    const auto nz = h.find_first_not_of('0');
    return nz == std::string::npos ? "0" : h.substr(nz);
  }
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw CliFailure{kMalformedInput, "invalid integer '" + token + "'"};
  std::uint64_t v = 0;
  try {
    v = std::stoull(token);
  } catch (const std::exception&) {
    throw CliFailure{kMalformedInput, "integer out of range '" + token + "' (use 0x hex)"};
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%" PRIx64, v);
  return buf;
}

std::vector<std::string> split(const std::string& list, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Json hex_list(const std::string& list) {
  Json out = Json::array();
  for (const auto& item : split(list)) out.push_back(to_canonical_hex(item));
  return out;
}

Json u64_list(const std::string& list) {
  Json out = Json::array();
  for (const auto& item : split(list)) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliFailure{kMalformedInput, "invalid interval '" + item + "'"};
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-instance verifiable partially homomorphic time-lock puzzles"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string out_path;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Fix all randomness to this seed");
    cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
  };

  // setup
  auto* setup = app.add_subcommand("setup", "Generate the public field parameters");
  unsigned prime_bits = 128, tbar = 3;
  std::optional<unsigned> leaders;
  bool unsafe_small = false;
  setup->add_option("--prime-bits", prime_bits, "Size of the prime p");
  setup->add_option("--tbar", tbar, "Number of coordinates");
  setup->add_option("--leaders", leaders, "Leader count; sets tbar to leaders + 2");
  setup->add_flag("--unsafe-small-prime", unsafe_small, "Permit primes below 128 bits (tests only)");
  add_common(setup);

  // keygen
  auto* keygen = app.add_subcommand("keygen", "Generate a client RSA keypair");
  unsigned rsa_bits = 1024;
  bool deterministic_rsa = false;
  keygen->add_option("--rsa-bits", rsa_bits, "Bits per RSA prime");
  keygen->add_flag("--deterministic-rsa", deterministic_rsa, "Derive primes from --seed");
  add_common(keygen);

  // puzzle-gen
  auto* pgen = app.add_subcommand("puzzle-gen", "Create a chain of puzzles");
  std::string field_path, keys_path, messages, intervals, secret_out;
  std::uint64_t maxss = 1;
  pgen->add_option("--field", field_path)->required();
  pgen->add_option("--keys", keys_path)->required();
  pgen->add_option("--messages", messages, "Comma-separated messages")->required();
  pgen->add_option("--intervals", intervals, "Comma-separated release gaps in seconds")->required();
  pgen->add_option("--maxss", maxss, "Squarings per second");
  pgen->add_option("--secret-out", secret_out, "Where to store the master keys")->required();
  add_common(pgen);

  // evaluate-sc
  auto* esc = app.add_subcommand("evaluate-sc", "Single-client linear combination");
  std::string chain_path, mk_path, coeffs;
  std::uint64_t delay = 0;
  esc->add_option("--field", field_path)->required();
  esc->add_option("--chain", chain_path)->required();
  esc->add_option("--master-keys", mk_path)->required();
  esc->add_option("--keys", keys_path)->required();
  esc->add_option("--coeffs", coeffs, "Comma-separated coefficients")->required();
  esc->add_option("--delay", delay, "Seconds until the result unlocks");
  esc->add_option("--secret-out", secret_out, "Where to store evaluation secrets");
  add_common(esc);

  // evaluate-mc
  auto* emc = app.add_subcommand("evaluate-mc", "Multi-client linear combination");
  std::vector<std::string> client_args;
  std::string rhat, config_out;
  std::size_t leader_count = 1, threshold = 1;
  emc->add_option("--field", field_path)->required();
  emc->add_option("--client", client_args, "KEYS,CHAIN,MASTER_KEYS,PUZZLE_ID,COEFF")->required();
  emc->add_option("--leaders", leader_count, "Number of leaders")->required();
  emc->add_option("--threshold", threshold, "Honesty threshold (metadata)");
  emc->add_option("--rhat", rhat, "Agreed random key (hex)")->required();
  emc->add_option("--delay", delay);
  emc->add_option("--maxss", maxss);
  emc->add_option("--config-out", config_out, "Where to store the leader configuration")->required();
  add_common(emc);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a chain or an evaluation puzzle");
  std::string what, eval_path, config_path, bundle_path;
  solve->add_option("--what", what)->required()->check(CLI::IsMember({"chain", "eval-sc", "eval-mc"}));
  solve->add_option("--field", field_path)->required();
  solve->add_option("--chain", chain_path);
  solve->add_option("--eval", eval_path);
  solve->add_option("--leaders-config", config_path);
  add_common(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a solution bundle");
  verify->add_option("--what", what)->required()->check(CLI::IsMember({"client", "eval-sc", "eval-mc"}));
  verify->add_option("--field", field_path);
  verify->add_option("--bundle", bundle_path)->required();
  verify->add_option("--chain", chain_path);
  verify->add_option("--eval", eval_path);
  verify->add_option("--leaders-config", config_path);

  // bench-squaring
  auto* bench = app.add_subcommand("bench-squaring", "Measure squarings per second");
  double duration = 1.0;
  bench->add_option("--rsa-bits", rsa_bits, "Bits per RSA prime");
  bench->add_option("--duration", duration, "Seconds to measure");
  add_common(bench);

  // run-scenario
  auto* scen = app.add_subcommand("run-scenario", "Run a scenario end to end");
  std::string scenario_path, faults_path;
  scen->add_option("file", scenario_path)->required();
  scen->add_option("--faults", faults_path, "JSON fault plan overriding the scenario's");
  scen->add_option("--prime-bits", prime_bits);
  scen->add_option("--rsa-bits", rsa_bits);
  scen->add_flag("--deterministic-rsa", deterministic_rsa);
  add_common(scen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kMalformedInput;
  }

  try {
    if (*setup) {
      if (leaders) tbar = *leaders + 2;
      Rng rng(seed);
      Field field;
      check(mhtlp_field_generate(prime_bits, tbar, unsafe_small, rng.h, &field.h), "setup");
      CString json;
      check(mhtlp_field_to_json(field.h, json.out()), "setup");
      write_output(out_path, json.str());
    } else if (*keygen) {
      Rng rng(deterministic_rsa ? seed : std::nullopt);
      CString json;
      check(mhtlp_keygen(rsa_bits, rng.h, json.out()), "keygen");
      write_output(out_path, json.str());
    } else if (*pgen) {
      Field field;
      load_field(field_path, field);
      Rng rng(seed);
      const Json schedule = {{"intervals", u64_list(intervals)}, {"maxss", maxss}};
      CString chain, mks;
      check(mhtlp_puzzle_gen(field.h, read_file(keys_path).c_str(), hex_list(messages).dump().c_str(),
                             schedule.dump().c_str(), rng.h, chain.out(), mks.out()),
            "puzzle-gen");
      write_output(secret_out, mks.str());
      write_output(out_path, chain.str());
    } else if (*esc) {
      Field field;
      load_field(field_path, field);
      Rng rng(seed);
      CString eval, secrets;
      check(mhtlp_evaluate_sc(field.h, read_file(chain_path).c_str(), read_file(mk_path).c_str(),
                              read_file(keys_path).c_str(), hex_list(coeffs).dump().c_str(), delay,
                              rng.h, eval.out(), secret_out.empty() ? nullptr : secrets.out()),
            "evaluate-sc");
      if (!secret_out.empty()) write_output(secret_out, secrets.str());
      write_output(out_path, eval.str());
    } else if (*emc) {
      Field base, field;
      load_field(field_path, base);
      check(mhtlp_field_with_tbar(base.h, static_cast<unsigned>(leader_count + 2), &field.h),
            "evaluate-mc");
      Json clients = Json::array();
      for (const auto& arg : client_args) {
        const auto parts = split(arg);
        if (parts.size() != 5)
          throw CliFailure{kMalformedInput, "--client expects KEYS,CHAIN,MASTER_KEYS,PUZZLE_ID,COEFF"};
        std::size_t id = 0;
        try {
          id = std::stoul(parts[3]);
        } catch (const std::exception&) {
          throw CliFailure{kMalformedInput, "invalid puzzle id '" + parts[3] + "'"};
        }
        clients.push_back({{"keypair", read_json(parts[0])},
                           {"chain", read_json(parts[1])},
                           {"master_keys", read_json(parts[2])},
                           {"puzzle_id", id},
                           {"coefficient", to_canonical_hex(parts[4])}});
      }
      CString config;
      check(mhtlp_select_leaders(clients.size(), leader_count, threshold, rhat.c_str(), config.out()),
            "evaluate-mc");
      Rng rng(seed);
      CString eval;
      check(mhtlp_evaluate_mc(field.h, clients.dump().c_str(), config.str().c_str(), delay, maxss,
                              rng.h, eval.out()),
            "evaluate-mc");
      write_output(config_out, config.str());
      write_output(out_path, eval.str());
    } else if (*solve) {
      Field field;
      load_field(field_path, field);
      CString bundle;
      if (what == "chain") {
        if (chain_path.empty()) throw CliFailure{kMalformedInput, "--chain is required"};
        check(mhtlp_solve_chain(field.h, read_file(chain_path).c_str(), bundle.out()), "solve");
      } else {
        if (eval_path.empty()) throw CliFailure{kMalformedInput, "--eval is required"};
        const Json eval = read_json(eval_path);
        if (!eval.contains("puzzle")) throw CliFailure{kMalformedInput, "evaluation lacks 'puzzle'"};
        if (what == "eval-sc") {
          if (!eval.contains("grant")) throw CliFailure{kMalformedInput, "evaluation lacks 'grant'"};
          check(mhtlp_solve_eval_sc(field.h, eval["puzzle"].dump().c_str(),
                                    eval["grant"].dump().c_str(), bundle.out()),
                "solve");
        } else {
          if (!eval.contains("grants") || config_path.empty())
            throw CliFailure{kMalformedInput, "eval-mc needs grants and --leaders-config"};
          Field wide;
          const Json cfg = read_json(config_path);
          check(mhtlp_field_with_tbar(field.h, cfg.value("tddot", 0u) + 2, &wide.h), "solve");
          check(mhtlp_solve_eval_mc(wide.h, eval["puzzle"].dump().c_str(),
                                    eval["grants"].dump().c_str(), cfg.dump().c_str(), bundle.out()),
                "solve");
        }
      }
      write_output(out_path, bundle.str());
    } else if (*verify) {
      const std::string bundle = read_file(bundle_path);
      mhtlp_status s = MHTLP_OK;
      if (what == "client") {
        if (chain_path.empty()) throw CliFailure{kMalformedInput, "--chain is required"};
        s = mhtlp_verify_client(bundle.c_str(), read_file(chain_path).c_str());
      } else {
        if (field_path.empty() || eval_path.empty())
          throw CliFailure{kMalformedInput, "--field and --eval are required"};
        Field field;
        load_field(field_path, field);
        const Json eval = read_json(eval_path);
        if (!eval.contains("puzzle")) throw CliFailure{kMalformedInput, "evaluation lacks 'puzzle'"};
        if (what == "eval-sc") {
          if (!eval.contains("grant")) throw CliFailure{kMalformedInput, "evaluation lacks 'grant'"};
          s = mhtlp_verify_eval_sc(field.h, bundle.c_str(), eval["puzzle"].dump().c_str(),
                                   eval["grant"].dump().c_str());
        } else {
          if (!eval.contains("grants") || config_path.empty())
            throw CliFailure{kMalformedInput, "eval-mc needs grants and --leaders-config"};
          const Json cfg = read_json(config_path);
          Field wide;
          check(mhtlp_field_with_tbar(field.h, cfg.value("tddot", 0u) + 2, &wide.h), "verify");
          s = mhtlp_verify_eval_mc(wide.h, bundle.c_str(), eval["puzzle"].dump().c_str(),
                                   eval["grants"].dump().c_str(), cfg.dump().c_str());
        }
      }
      if (s == MHTLP_REJECT) {
        std::cout << "reject: " << mhtlp_last_error() << "\n";
        return kReject;
      }
      check(s, "verify");
      std::cout << "accept\n";
    } else if (*bench) {
      Rng rng(seed);
      CString report;
      check(mhtlp_bench_squaring(rsa_bits, duration, rng.h, report.out()), "bench-squaring");
      write_output(out_path, report.str());
    } else if (*scen) {
      Json scenario = read_json(scenario_path);
      if (!faults_path.empty()) scenario["fault"] = read_json(faults_path);
      if (seed) scenario["seed"] = *seed;
      if (scen->count("--prime-bits")) scenario["prime_bits"] = prime_bits;
      if (scen->count("--rsa-bits")) scenario["rsa_bits"] = rsa_bits;
      if (deterministic_rsa) scenario["deterministic_rsa"] = true;
      CString transcript;
      const mhtlp_status s = mhtlp_run_scenario(scenario.dump().c_str(), transcript.out());
      if (s != MHTLP_OK && s != MHTLP_REJECT) check(s, "run-scenario");
      const std::string text = transcript.str();
      if (!out_path.empty()) write_output(out_path, text);
      const Json parsed = Json::parse(text);
      for (const auto& line : parsed["verdicts"]) std::cout << line.get<std::string>() << "\n";
      std::cout << "outcome: " << parsed["outcome"].get<std::string>() << "\n";
      return s == MHTLP_OK ? kAccept : kReject;
    }
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kAccept;
}
