// Copyright 2026 The chir Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// `--big` adds k = 22 to the run-minimal family check.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chir/clustered.hpp"
#include "chir/conjecture.hpp"
#include "chir/debruijn.hpp"
#include "chir/oracle.hpp"
#include "chir/runmin.hpp"
#include "chir/suffixient.hpp"

namespace {

using namespace chir;

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::set<Word> words(const SymbolString& like, std::initializer_list<std::string_view> items) {
  std::set<Word> out;
  for (auto item : items) {
    Word w;
    for (char ch : item) w.push_back(ch == '$' ? kSentinel : *like.alphabet().rank_of(static_cast<unsigned char>(ch)));
    out.insert(w);
  }
  return out;
}

SymbolString bin(std::string_view text) { return SymbolString::parse(text, make_alphabet(Alphabet::binary())); }

Outcome worked_examples() {
  Outcome o;
  const SymbolString t = terminate(SymbolString::parse("aabaa"));
  const ExtensionReport rep = smallest_suffixient_set(t);
  o.check(rep.chi == 3, "chi(aabaa) = " + std::to_string(rep.chi));
  o.check(rep.suffixient_positions == std::vector<std::size_t>{1, 2, 5}, "witness set of aabaa$ is not {1,2,5}");
  o.check(right_extensions(t) == words(t, {"a", "b", "$", "aa", "ab", "a$", "aab", "aa$"}), "E_r(aabaa$) differs");
  o.check(super_maximal_extensions(t) == words(t, {"aa", "aab", "aa$"}), "S_r(aabaa$) differs");

  const SymbolString k = terminate(SymbolString::parse("332222111"));
  const BwtOutput b = bwt(k);
  o.check(b.last_column.to_string() == "111222233$", "BWT(332222111$) = " + b.last_column.to_string());
  o.check(b.runs == 4, "r(332222111$) = " + std::to_string(b.runs));
  o.check(smallest_suffixient_set(k).chi == 6, "chi(332222111) != 6");

  const F2Poly c = F2Poly::parse("x^3+x+1");
  o.check(equal_up_to_rotation(m_sequence(c, LfsrState::parse("001")), CyclicWord(bin("0010111"), 3)),
          "main cycle is not a rotation of 0010111");
  const JoinedLfsr f = cycle_join(c);
  o.check(f.base_successor(LfsrState::zeros(3)) == LfsrState::zeros(3), "000 is not a fixed point");
  o.check(f.pair().first.to_string() == "000" && f.pair().second.to_string() == "100", "conjugate pair is not (000,100)");
  o.check(f.cycle().to_string() == "00010111", "joined cycle is " + f.cycle().to_string());
  return o;
}

Outcome clustered_family() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::size_t instances = 0;
  for (std::size_t sigma = 2; sigma <= 12; ++sigma) {
    for (int i = 0; i < 50; ++i) {
      const SymbolString k_word = make_clustered(random_clustered_spec(sigma, rng));
      const ClusteredReport rep = verify_clustered(k_word);
      ++instances;
      if (rep.r != sigma + 1 || rep.chi != 2 * sigma || rep.ratio != clustered_ratio(sigma))
        o.failures.push_back(k_word.to_string() + ": r = " + std::to_string(rep.r) + ", chi = " +
                             std::to_string(rep.chi) + ", ratio = " + rep.ratio.to_string());
    }
  }
  o.notes.push_back(std::to_string(instances) + " instances");
  return o;
}

Outcome runmin_family(bool big) {
  Outcome o;
  std::vector<std::size_t> ks{2, 3, 4, 6, 7, 15};
  if (big) ks.push_back(22);
  for (std::size_t k : ks) {
    const RunMinReport rep = verify_linearized(k);
    const std::string at = "k = " + std::to_string(k) + ": ";
    o.check(rep.cbwt_column == runmin_pattern(k), at + "cBWT(M_k) differs from the pattern");
    o.check(rep.r_c == (std::size_t{1} << (k - 1)) + 2, at + "r_c = " + std::to_string(rep.r_c));
    o.check(rep.last_column == runmin_linearized_bwt(k), at + "BWT(U_lin$) differs from the pattern");
    o.check(rep.r == (std::size_t{1} << (k - 1)) + 4, at + "r = " + std::to_string(rep.r));
    o.check(rep.chi == (std::size_t{1} << k) + 1, at + "chi = " + std::to_string(rep.chi));
    o.check(rep.ratio == Rational(static_cast<std::int64_t>((1LL << k) + 1), static_cast<std::int64_t>((1LL << (k - 1)) + 4)),
            at + "ratio = " + rep.ratio.to_string());
    for (const auto& f : rep.failures) o.failures.push_back(at + f);
  }
  std::ostringstream ks_text;
  for (std::size_t k : ks) ks_text << (ks_text.tellp() > 0 ? "," : "") << k;
  o.notes.push_back("k in {" + ks_text.str() + "}");
  return o;
}

Outcome primitivity_gate() {
  Outcome o;
  // Leading terms of the integer sequence "x^n + x + 1 is primitive over GF(2)".
  const std::vector<unsigned> reference{2, 3, 4, 6, 7, 15};
  const std::vector<unsigned> got = primitive_trinomial_degrees(15);
  o.check(got == reference, "primitive_trinomial_degrees(15) differs from [2,3,4,6,7,15]");
  for (std::size_t k : {5U, 8U}) {
    bool rejected = false;
    try {
      (void)make_runmin(k);
    } catch (const not_in_family&) {
      rejected = true;
    }
    o.check(rejected, "make_runmin(" + std::to_string(k) + ") did not fail with a primitivity error");
  }
  return o;
}

Outcome sigma_bounds() {
  Outcome o;
  std::size_t cells = 0;
  for (std::size_t sigma = 2; sigma <= 5; ++sigma) {
    for (std::size_t k = 2; k <= 4; ++k) {
      if (detail::bounded_power(sigma, k, 1024) == 0) continue;
      const SigmaBoundsReport rep = verify_sigma_bounds(lex_least_debruijn(sigma, k));
      ++cells;
      if (!rep.ok())
        o.failures.push_back("sigma = " + std::to_string(sigma) + ", k = " + std::to_string(k) + ": sre = " +
                             std::to_string(rep.sre) + ", chi = " + std::to_string(rep.chi) + ", r = " +
                             std::to_string(rep.r) + ", ratio = " + rep.ratio.to_string());
    }
  }
  o.notes.push_back(std::to_string(cells) + " cells");
  return o;
}

Outcome oracle_equivalence() {
  constexpr std::size_t kStrings = 1000;
  std::vector<SymbolString> inputs;
  std::mt19937_64 rng(6);
  for (std::size_t i = 0; i < kStrings; ++i) {
    const std::size_t sigma = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    std::uniform_int_distribution<Rank> sym(0, static_cast<Rank>(sigma - 1));
    Word ranks(n);
    for (Rank& r : ranks) r = sym(rng);
    inputs.push_back(terminate(SymbolString(make_alphabet(Alphabet::ranked(sigma)), std::move(ranks), false)));
  }

  std::vector<std::string> errors(kStrings);
  auto work = [&](std::size_t from, std::size_t step) {
    for (std::size_t i = from; i < kStrings; i += step) {
      const SymbolString& t = inputs[i];
      const BwtOutput b = bwt(t);
      if (smallest_suffixient_set(t).chi != oracle::brute_force_chi(t)) errors[i] = "chi mismatch";
      else if (b.last_column.ranks() != oracle::rotation_matrix_last_column(t.ranks())) errors[i] = "BWT mismatch";
      else if (const Inversion inv = invert_bwt(b.last_column); !inv.valid() || !(*inv.text == t))
        errors[i] = "inversion mismatch";
    }
  };
  const unsigned threads = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  for (auto& th : pool) th.join();

  Outcome o;
  for (std::size_t i = 0; i < kStrings; ++i)
    if (!errors[i].empty()) o.failures.push_back(errors[i] + " on " + inputs[i].to_string());
  o.notes.push_back(std::to_string(kStrings) + " strings");
  return o;
}

Outcome conjecture_probes() {
  Outcome o;
  for (std::size_t k = 2; k <= 5; ++k) {
    const std::size_t count = enumerate_debruijn(k).size();
    o.check(count == debruijn_cycle_count(k),
            "k = " + std::to_string(k) + ": " + std::to_string(count) + " cycles enumerated");
  }
  for (std::size_t k : {3U, 4U}) {
    const std::string member = canonical_rotation(make_runmin(k)).to_string();
    const auto achievers = runmin_achievers(k);
    o.check(std::any_of(achievers.begin(), achievers.end(),
                        [&](const DeBruijnCycle& c) { return c.word.to_string() == member; }),
            "M_" + std::to_string(k) + " missing from the achievers");
  }
  const DollarScan scan3 = dollar_positions(runmin_pattern(3));
  const auto at = std::find(scan3.valid_positions.begin(), scan3.valid_positions.end(), std::size_t{1});
  o.check(at != scan3.valid_positions.end() &&
              scan3.recovered[static_cast<std::size_t>(at - scan3.valid_positions.begin())].to_string() == "00010111$",
          "position 1 of runmin_pattern(3) does not recover 00010111$");

  const ConjectureReport five = conjecture_report(5, std::max(1U, std::thread::hardware_concurrency()));
  for (const auto& issue : five.inconsistencies) o.failures.push_back("k = 5: " + issue);
  const bool empty = five.scan.valid_positions.empty();
  o.notes.push_back("k = 5 scan: " + std::to_string(five.scan.valid_positions.size()) + " valid positions, " +
                    std::to_string(five.achievers.size()) + " achievers; " +
                    (empty ? "matches the expected empty result" : "MISMATCH with the expected empty result"));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--big") == 0) {
      big = true;
    } else {
      std::cerr << "usage: acceptance [--big]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "worked-example goldens", 1.0, worked_examples},
      {2, "clustered family closed forms", 10.0, clustered_family},
      {3, "run-minimal family closed forms", big ? 600.0 : 30.0, [big] { return runmin_family(big); }},
      {4, "primitivity gate", 1.0, primitivity_gate},
      {5, "sigma-ary de Bruijn bounds", 10.0, sigma_bounds},
      {6, "oracle equivalence", 60.0, oracle_equivalence},
      {7, "conjecture probes", 60.0, conjecture_probes},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds)
      o.failures.push_back("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");

    std::ostringstream line;
    line << (o.failures.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title;
    for (const auto& n : o.notes) line << " [" << n << "]";
    line.setf(std::ios::fixed);
    line.precision(3);
    line << " (" << seconds << " s)";
    std::cout << line.str() << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(o.failures.size(), 10); ++i)
      std::cout << "      " << o.failures[i] << '\n';
    if (o.failures.size() > 10) std::cout << "      ... " << o.failures.size() - 10 << " more\n";
    failed += o.failures.empty() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << '\n';
  return failed == 0 ? 0 : 1;
}
