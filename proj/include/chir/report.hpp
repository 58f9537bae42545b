// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

// Command implementations behind the `chir` tool. Each command returns a
// Report; rendering to text, JSON or CSV is deterministic.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chir/bwt.hpp"
#include "chir/clustered.hpp"
#include "chir/conjecture.hpp"
#include "chir/debruijn.hpp"
#include "chir/oracle.hpp"
#include "chir/rational.hpp"
#include "chir/runmin.hpp"
#include "chir/suffixient.hpp"
#include "json.hpp"

namespace chir::cli {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw contract_error("unknown format '" + name + "'");
}

/// One measured word. Column order is fixed by `kCsvHeader`.
struct Row {
  std::string family;
  std::size_t k = 0;
  std::size_t sigma = 0;
  std::size_t n = 0;
  std::size_t chi = 0;
  std::size_t r = 0;
  std::size_t r_bar = 0;
  std::size_t r_c = 0;
  std::size_t sre = 0;
  Rational ratio;
  bool pass = true;
  std::vector<std::string> failures;
};

inline constexpr const char* kCsvHeader = "family,k,sigma,n,chi,r,r_bar,r_c,sre,ratio_num,ratio_den,pass";

struct Report {
  std::string command;
  json params = json::object();
  std::vector<Row> rows;
  bool pass = true;
  bool incomplete = false;
  std::vector<std::string> notices;
  json details;  // command-specific payload (conjecture scans)
};

inline json row_json(const Row& row) {
  json j;
  j["family"] = row.family;
  j["k"] = row.k;
  j["sigma"] = row.sigma;
  j["n"] = row.n;
  j["chi"] = row.chi;
  j["r"] = row.r;
  j["r_bar"] = row.r_bar;
  j["r_c"] = row.r_c;
  j["sre"] = row.sre;
  j["ratio_num"] = row.ratio.num();
  j["ratio_den"] = row.ratio.den();
  j["pass"] = row.pass;
  if (!row.failures.empty()) j["failures"] = row.failures;
  return j;
}

inline std::string render(const Report& rep, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      json j;
      j["command"] = rep.command;
      j["params"] = rep.params;
      j["rows"] = json::array();
      for (const auto& row : rep.rows) j["rows"].push_back(row_json(row));
      j["pass"] = rep.pass;
      if (rep.incomplete) j["incomplete"] = true;
      if (!rep.notices.empty()) j["notices"] = rep.notices;
      if (!rep.details.is_null()) j["details"] = rep.details;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << kCsvHeader << '\n';
      for (const auto& r : rep.rows)
        out << r.family << ',' << r.k << ',' << r.sigma << ',' << r.n << ',' << r.chi << ',' << r.r << ',' << r.r_bar
            << ',' << r.r_c << ',' << r.sre << ',' << r.ratio.num() << ',' << r.ratio.den() << ','
            << (r.pass ? "true" : "false") << '\n';
      break;
    }
    case Format::text: {
      out << rep.command << ' ' << rep.params.dump() << '\n';
      if (!rep.rows.empty()) {
        out << std::left << std::setw(10) << "family" << std::right << std::setw(4) << "k" << std::setw(6) << "sigma"
            << std::setw(10) << "n" << std::setw(9) << "chi" << std::setw(9) << "r" << std::setw(9) << "r_bar"
            << std::setw(9) << "r_c" << std::setw(9) << "sre" << std::setw(14) << "chi/r" << "  pass\n";
        for (const auto& r : rep.rows) {
          out << std::left << std::setw(10) << r.family << std::right << std::setw(4) << r.k << std::setw(6) << r.sigma
              << std::setw(10) << r.n << std::setw(9) << r.chi << std::setw(9) << r.r << std::setw(9) << r.r_bar
              << std::setw(9) << r.r_c << std::setw(9) << r.sre << std::setw(14) << r.ratio.to_string() << "  "
              << (r.pass ? "ok" : "FAIL") << '\n';
          for (const auto& f : r.failures) out << "    " << f << '\n';
        }
      }
      if (!rep.details.is_null()) out << rep.details.dump(2) << '\n';
      for (const auto& note : rep.notices) out << "note: " << note << '\n';
      if (rep.incomplete) out << "incomplete: some requested instances exceeded the budget\n";
      out << (rep.pass ? "PASS" : "FAIL") << '\n';
      break;
    }
  }
  return out.str();
}

/// Runs independent row builders on up to `jobs` threads; rows keep task order.
inline std::vector<Row> run_rows(const std::vector<std::function<Row()>>& tasks, unsigned jobs) {
  std::vector<Row> rows(tasks.size());
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = tasks[i]();
    return rows;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < tasks.size(); i += jobs) rows[i] = tasks[i]();
    });
  for (auto& th : pool) th.join();
  return rows;
}

inline Rational ratio_of(std::size_t chi, std::size_t r) {
  return Rational(static_cast<std::int64_t>(chi), static_cast<std::int64_t>(std::max<std::size_t>(r, 1)));
}

/// All measures of an unterminated word. With `oracle`, χ and both BWTs are
/// recomputed from the definitions and any disagreement fails the row.
inline Row measure_row(const SymbolString& w, std::string family, bool oracle) {
  detail::require(!w.empty(), "measure: empty input");
  const SymbolString term = terminate(w);
  if (oracle && term.size() > oracle::kDefaultCap)
    throw budget_exceeded("measure: --oracle is capped at " + std::to_string(oracle::kDefaultCap) + " symbols");

  Row row;
  row.family = std::move(family);
  row.sigma = w.sigma();
  row.n = w.size();
  const BwtOutput forward = bwt(term);
  const RunMeasures runs = r_measures(w);
  row.chi = smallest_suffixient_set(term).chi;
  row.r = runs.r;
  row.r_bar = runs.r_bar;
  row.r_c = runs.r_c;
  row.sre = sre(w);
  row.ratio = ratio_of(row.chi, row.r);
  if (oracle) {
    const std::size_t slow_chi = oracle::brute_force_chi(term);
    if (slow_chi != row.chi)
      row.failures.push_back("oracle chi " + std::to_string(slow_chi) + " != " + std::to_string(row.chi));
    if (oracle::rotation_matrix_last_column(term.ranks()) != forward.last_column.ranks())
      row.failures.push_back("oracle BWT differs from suffix-array BWT");
    const std::size_t slow_sre = oracle::brute_force_extensions(w.ranks(), true).super_maximal.size();
    if (slow_sre != row.sre)
      row.failures.push_back("oracle sre " + std::to_string(slow_sre) + " != " + std::to_string(row.sre));
  }
  row.pass = row.failures.empty();
  return row;
}

inline Report cmd_measure(const SymbolString& w, bool oracle) {
  Report rep;
  rep.command = "measure";
  rep.params["oracle"] = oracle;
  rep.params["alphabet"] = std::string(w.alphabet().symbols().begin(), w.alphabet().symbols().end());
  rep.rows.push_back(measure_row(w, "input", oracle));
  rep.pass = rep.rows.front().pass;
  return rep;
}

/// Decodes raw input bytes under a named alphabet ("sorted", "binary", ...).
inline SymbolString decode_input(const std::string& bytes, const std::string& alphabet_name) {
  detail::require(!bytes.empty(), "measure: empty input");
  if (bytes.find(kSentinelLabel) != std::string::npos)
    throw contract_error("input contains '$', which is reserved for the virtual sentinel");
  SymbolString w = SymbolString::parse(bytes, make_alphabet(Alphabet::named(alphabet_name, bytes)));
  return w;
}

// ---------------------------------------------------------------------------
// gen

struct Generated {
  std::string word;
  json provenance;
};

inline Generated gen_clustered(const ClusteredSpec& spec) {
  const SymbolString k_word = make_clustered(spec);
  Generated g;
  g.word = k_word.to_string();
  g.provenance["family"] = "clustered";
  g.provenance["params"] = {{"sigma", spec.sigma}, {"exponents", spec.exponents}};
  g.provenance["expected"] = {{"r", spec.sigma + 1}, {"chi", 2 * spec.sigma}};
  return g;
}

inline Generated gen_runmin(std::size_t k) {
  const DeBruijnCycle m = make_runmin(k);
  Generated g;
  g.word = canonical_rotation(m).to_string();
  g.provenance["family"] = "runmin";
  g.provenance["params"] = {{"k", k}};
  g.provenance["expected"] = {{"r_c", runmin_expected_rc(k)}, {"r", runmin_expected_r(k)}, {"chi", runmin_expected_chi(k)}};
  return g;
}

inline Generated gen_debruijn(std::size_t sigma, std::size_t k) {
  const DeBruijnCycle c = lex_least_debruijn(sigma, k);
  const std::size_t power = c.word.size();
  Generated g;
  g.word = c.word.to_string();
  g.provenance["family"] = "debruijn";
  g.provenance["params"] = {{"sigma", sigma}, {"k", k}};
  g.provenance["expected"] = {{"sre", power}, {"chi", power + 1}, {"r_lower_bound", power / sigma * (sigma - 1) + 1}};
  return g;
}

// ---------------------------------------------------------------------------
// verify / sweep

struct VerifyLimits {
  std::optional<std::size_t> sigma;
  std::optional<std::size_t> k;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  bool big = false;
  bool oracle = false;
  unsigned jobs = 1;
};

inline constexpr std::size_t kRunminDefaultK = 15;
inline constexpr std::size_t kRunminBigK = 22;
inline constexpr std::size_t kSigmaBoundsCells = 1024;
inline constexpr std::size_t kSigmaBoundsBigCells = std::size_t{1} << 20;

inline Row clustered_row(const ClusteredSpec& spec, bool oracle) {
  const SymbolString k_word = make_clustered(spec);
  Row row = measure_row(k_word, "clustered", oracle);
  const ClusteredReport rep = verify_clustered(k_word);
  if (!rep.runs_ok) row.failures.push_back("r = " + std::to_string(rep.r) + ", expected sigma+1");
  if (!rep.chi_ok) row.failures.push_back("chi = " + std::to_string(rep.chi) + ", expected 2 sigma");
  if (!rep.last_column_ok) row.failures.push_back("BWT last column differs from s_0^k0 ... s_{s-1}^k{s-1} $");
  if (!rep.ratio_ok) row.failures.push_back("chi/r differs from 2 sigma/(sigma+1)");
  row.pass = row.failures.empty();
  return row;
}

inline Row runmin_row(std::size_t k) {
  const RunMinReport rep = verify_linearized(k);
  Row row;
  row.family = "runmin";
  row.k = k;
  row.sigma = 2;
  row.n = (std::size_t{1} << k) + k - 1;
  row.chi = rep.chi;
  row.r = rep.r;
  row.r_bar = rep.r_bar;
  row.r_c = rep.r_c;
  row.sre = rep.sre;
  row.ratio = rep.ratio;
  row.failures = rep.failures;
  row.pass = rep.ok();
  return row;
}

inline Row sigma_bounds_row(std::size_t sigma, std::size_t k) {
  const DeBruijnCycle c = lex_least_debruijn(sigma, k);
  const SigmaBoundsReport rep = verify_sigma_bounds(c);
  const SymbolString lin = linearize(CyclicWord(canonical_rotation(c), k), k);
  Row row;
  row.family = "debruijn";
  row.k = k;
  row.sigma = sigma;
  row.n = lin.size();
  row.chi = rep.chi;
  row.r = rep.r;
  row.r_bar = bwt(terminate(reverse(lin))).runs;
  row.r_c = cbwt(c.word).runs;
  row.sre = rep.sre;
  row.ratio = rep.ratio;
  if (!rep.sre_ok) row.failures.push_back("sre != sigma^k");
  if (!rep.chi_ok) row.failures.push_back("chi != sigma^k + 1");
  if (!rep.r_lb_ok) row.failures.push_back("r below sigma^(k-1)(sigma-1)+1");
  if (!rep.ratio_ok) row.failures.push_back("chi/r not below sigma/(sigma-1)");
  row.pass = row.failures.empty();
  return row;
}

inline void add_clustered_tasks(std::vector<std::function<Row()>>& tasks, const VerifyLimits& lim, std::size_t sigma_max,
                                std::size_t count) {
  std::mt19937_64 rng(lim.seed);
  for (std::size_t sigma = 2; sigma <= sigma_max; ++sigma) {
    for (std::size_t i = 0; i < count; ++i) {
      ClusteredSpec spec = random_clustered_spec(sigma, rng);
      tasks.emplace_back([spec, oracle = lim.oracle] { return clustered_row(spec, oracle); });
    }
  }
}

inline Report cmd_verify(const std::string& scope, const VerifyLimits& lim) {
  detail::require(scope == "clustered" || scope == "runmin" || scope == "sigma-bounds" || scope == "all",
                  "verify: scope must be clustered, runmin, sigma-bounds or all");
  Report rep;
  rep.command = "verify";
  rep.params["scope"] = scope;
  if (lim.sigma) rep.params["sigma"] = *lim.sigma;
  if (lim.k) rep.params["k"] = *lim.k;
  rep.params["count"] = lim.count;
  rep.params["seed"] = lim.seed;
  rep.params["big"] = lim.big;
  rep.params["oracle"] = lim.oracle;

  std::vector<std::function<Row()>> tasks;
  const bool all = scope == "all";

  if (all || scope == "clustered") {
    const std::size_t sigma_max = lim.sigma.value_or(12);
    detail::require(sigma_max >= 2, "verify clustered: sigma must be at least 2");
    if (sigma_max > 62) {
      rep.incomplete = true;
      rep.notices.push_back("clustered: sigma capped at 62");
    }
    add_clustered_tasks(tasks, lim, std::min<std::size_t>(sigma_max, 62), lim.count);
  }

  if (all || scope == "runmin") {
    std::size_t k_max = lim.k.value_or(lim.big ? kRunminBigK : kRunminDefaultK);
    if (k_max > kRunminBigK) {
      rep.incomplete = true;
      rep.notices.push_back("runmin: orders above " + std::to_string(kRunminBigK) + " skipped");
      k_max = kRunminBigK;
    }
    for (unsigned k : primitive_trinomial_degrees(static_cast<unsigned>(k_max))) {
      if (k > kRunminDefaultK && !lim.big) {
        rep.incomplete = true;
        rep.notices.push_back("runmin: k = " + std::to_string(k) + " needs --big");
        continue;
      }
      tasks.emplace_back([k] { return runmin_row(k); });
    }
  }

  if (all || scope == "sigma-bounds") {
    const std::size_t sigma_max = lim.sigma.value_or(5);
    const std::size_t k_max = lim.k.value_or(4);
    const std::size_t cells = lim.big ? kSigmaBoundsBigCells : kSigmaBoundsCells;
    for (std::size_t sigma = 2; sigma <= std::min<std::size_t>(sigma_max, 62); ++sigma) {
      for (std::size_t k = 2; k <= k_max; ++k) {
        if (detail::bounded_power(sigma, k, cells) == 0) {
          rep.incomplete = true;
          rep.notices.push_back("sigma-bounds: sigma = " + std::to_string(sigma) + ", k = " + std::to_string(k) +
                                " exceeds " + std::to_string(cells) + " symbols");
          continue;
        }
        tasks.emplace_back([sigma, k] { return sigma_bounds_row(sigma, k); });
      }
    }
  }

  rep.rows = run_rows(tasks, lim.jobs);
  rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(), [](const Row& r) { return r.pass; });
  return rep;
}

/// Seeded random sweeps. "clustered": `count` exponent vectors per sigma.
/// "random": `count` random words, efficient paths checked against the oracles.
inline Report cmd_sweep(const std::string& family, const VerifyLimits& lim, std::size_t max_length = 64) {
  detail::require(family == "clustered" || family == "random", "sweep: family must be clustered or random");
  Report rep;
  rep.command = "sweep";
  rep.params["family"] = family;
  rep.params["count"] = lim.count;
  rep.params["seed"] = lim.seed;
  rep.params["oracle"] = lim.oracle;

  std::vector<std::function<Row()>> tasks;
  if (family == "clustered") {
    const std::size_t sigma_max = std::min<std::size_t>(lim.sigma.value_or(12), 62);
    rep.params["sigma"] = sigma_max;
    add_clustered_tasks(tasks, lim, sigma_max, lim.count);
  } else {
    const std::size_t sigma_max = std::min<std::size_t>(lim.sigma.value_or(4), 62);
    detail::require(sigma_max >= 2, "sweep random: sigma must be at least 2");
    detail::require(max_length >= 1 && max_length < oracle::kDefaultCap, "sweep random: length out of range");
    rep.params["sigma"] = sigma_max;
    rep.params["max_length"] = max_length;
    std::mt19937_64 rng(lim.seed);
    for (std::size_t i = 0; i < lim.count; ++i) {
      const std::size_t sigma = std::uniform_int_distribution<std::size_t>(2, sigma_max)(rng);
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
      std::uniform_int_distribution<Rank> sym(0, static_cast<Rank>(sigma - 1));
      Word ranks(n);
      for (Rank& r : ranks) r = sym(rng);
      SymbolString w(make_alphabet(Alphabet::ranked(sigma)), std::move(ranks), false);
      tasks.emplace_back([w] {
        Row row = measure_row(w, "random", true);
        const SymbolString term = terminate(w);
        const Inversion inv = invert_bwt(bwt(term).last_column);
        if (!inv.valid() || !(*inv.text == term)) row.failures.push_back("BWT inversion did not round-trip");
        row.pass = row.failures.empty();
        return row;
      });
    }
  }
  rep.rows = run_rows(tasks, lim.jobs);
  rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(), [](const Row& r) { return r.pass; });
  return rep;
}

// ---------------------------------------------------------------------------
// conjecture

inline constexpr std::size_t kDollarScanMaxK = 15;

inline Report cmd_conjecture(std::size_t k, unsigned jobs = 1) {
  detail::require(k >= 2 && k <= kDollarScanMaxK, "conjecture: k must lie in [2, 15]");
  const ConjectureReport c = conjecture_report(k, jobs);
  Report rep;
  rep.command = "conjecture";
  rep.params["k"] = k;

  json d;
  d["trinomial"] = trinomial(static_cast<unsigned>(k)).to_string();
  d["trinomial_primitive"] = c.trinomial_primitive;
  d["pattern_length"] = c.scan.base.size();
  d["valid_positions"] = c.scan.valid_positions;
  json recovered = json::array();
  for (const auto& text : c.scan.recovered)
    recovered.push_back(text.size() <= 80 ? text.to_string() : text.to_string().substr(0, 77) + "...");
  d["recovered"] = recovered;
  if (c.expectation_met) {
    d["expectation"] = "no valid sentinel position for a non-primitive trinomial";
    d["expectation_met"] = *c.expectation_met;
    if (!*c.expectation_met) rep.notices.push_back("sentinel scan found positions where none were expected");
  }
  d["enumerated"] = c.enumerated;
  if (c.enumerated) {
    d["cycle_count"] = c.cycle_count;
    d["expected_cycle_count"] = c.expected_cycle_count;
    d["family_member_found"] = c.family_member_found;
    json achievers = json::array();
    for (const auto& a : c.achievers) {
      json aj;
      aj["rotation"] = a.rotation.to_string();
      aj["family_member"] = a.is_family_member;
      aj["reverse_achieves"] = a.reverse_achieves;
      aj["complement_achieves"] = a.complement_achieves;
      aj["reverse_complement_achieves"] = a.reverse_complement_achieves;
      if (a.sentinel_insertion) aj["sentinel_insertion"] = *a.sentinel_insertion;
      achievers.push_back(aj);
      Row row = measure_row(linearize(CyclicWord(a.rotation, k), k), "achiever", false);
      row.k = k;
      row.r_c = cbwt(CyclicWord(a.rotation, k)).runs;
      rep.rows.push_back(row);
    }
    d["achievers"] = achievers;
  } else {
    rep.notices.push_back(c.enumeration_notice);
  }
  d["inconsistencies"] = c.inconsistencies;
  rep.details = d;
  rep.pass = c.consistent();
  return rep;
}

}  // namespace chir::cli
