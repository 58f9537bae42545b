// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chir/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw chir::contract_error("cannot open '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chir: suffixient-set and BWT-run measures on strings and string families"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 1;
  bool oracle = false;
  bool big = false;
  unsigned jobs = 1;
  std::optional<std::size_t> k;
  std::optional<std::size_t> sigma;
  std::vector<std::size_t> exponents;
  std::string input_path;
  std::string literal;
  std::string alphabet = "sorted";
  std::size_t count = 50;
  std::string scope;
  std::string kind;
  std::string family = "clustered";
  std::size_t max_length = 64;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* measure = app.add_subcommand("measure", "all measures of one word");
  measure->add_option("word", literal, "literal input");
  measure->add_option("--input", input_path, "read raw bytes from PATH");
  measure->add_option("--alphabet", alphabet, "sorted, binary, digits or bytes");
  measure->add_flag("--oracle", oracle, "cross-check against brute force");
  add_format(measure);

  auto* gen = app.add_subcommand("gen", "emit a family member with a provenance line");
  gen->add_option("kind", kind, "clustered, runmin or debruijn")
      ->required()
      ->check(CLI::IsMember({"clustered", "runmin", "debruijn"}));
  gen->add_option("--k", k, "order");
  gen->add_option("--sigma", sigma, "alphabet size");
  gen->add_option("--exponents", exponents, "run lengths, highest symbol first")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "check closed forms over a family");
  verify->add_option("scope", scope, "clustered, runmin, sigma-bounds or all")
      ->required()
      ->check(CLI::IsMember({"clustered", "runmin", "sigma-bounds", "all"}));
  verify->add_option("--k", k, "largest order");
  verify->add_option("--sigma", sigma, "largest alphabet size");
  verify->add_option("--count", count, "random clustered instances per sigma");
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--big", big, "allow k = 22 and larger grids");
  verify->add_flag("--oracle", oracle, "cross-check against brute force");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
  add_format(verify);

  auto* sweep = app.add_subcommand("sweep", "seeded random sweep");
  sweep->add_option("family", family, "clustered or random")->check(CLI::IsMember({"clustered", "random"}));
  sweep->add_option("--sigma", sigma, "largest alphabet size");
  sweep->add_option("--count", count, "instances (per sigma for clustered)");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--length", max_length, "largest random word length");
  sweep->add_flag("--oracle", oracle, "cross-check against brute force");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
  add_format(sweep);

  auto* conjecture = app.add_subcommand("conjecture", "sentinel scan and achiever census");
  conjecture->add_option("--k", k, "order")->required();
  conjecture->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 256U));
  add_format(conjecture);

  CLI11_PARSE(app, argc, argv);

  try {
    const chir::cli::Format fmt = chir::cli::parse_format(format);
    chir::cli::VerifyLimits lim;
    lim.sigma = sigma;
    lim.k = k;
    lim.count = count;
    lim.seed = seed;
    lim.big = big;
    lim.oracle = oracle;
    lim.jobs = jobs;

    chir::cli::Report rep;
    if (*measure) {
      if (literal.empty() == input_path.empty()) throw chir::contract_error("measure: give exactly one of a word or --input");
      const std::string bytes = input_path.empty() ? literal : read_file(input_path);
      rep = chir::cli::cmd_measure(chir::cli::decode_input(bytes, alphabet), oracle);
    } else if (*gen) {
      chir::cli::Generated g;
      if (kind == "clustered") {
        if (!sigma) sigma = exponents.size();
        g = chir::cli::gen_clustered(chir::ClusteredSpec{*sigma, exponents});
      } else if (kind == "runmin") {
        if (!k) throw chir::contract_error("gen runmin: --k is required");
        g = chir::cli::gen_runmin(*k);
      } else {
        if (!k || !sigma) throw chir::contract_error("gen debruijn: --sigma and --k are required");
        g = chir::cli::gen_debruijn(*sigma, *k);
      }
      std::cout << g.provenance.dump() << '\n' << g.word << '\n';
      return 0;
    } else if (*verify) {
      rep = chir::cli::cmd_verify(scope, lim);
    } else if (*sweep) {
      rep = chir::cli::cmd_sweep(family, lim, max_length);
    } else {
      rep = chir::cli::cmd_conjecture(*k, jobs);
    }
    std::cout << chir::cli::render(rep, fmt);
    return rep.pass ? 0 : kExitFail;
  } catch (const chir::not_in_family& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
