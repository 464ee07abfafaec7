// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 only if every selected criterion passes.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isac/cli.hpp"
#include "isac/engine.hpp"
#include "isac/montecarlo.hpp"
#include "isac/primes.hpp"
#include "isac/verifier.hpp"

using namespace isac;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void info(const std::string& line) { std::cout << "       " << line << '\n'; }

ChannelSet range_set(int first, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(first + i);
  return ChannelSet::from_ints(v);
}

// Indices of every size-k subset of [0, n), lexicographic.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

BatchConfig symmetric_batch(int q, double theta, std::uint64_t runs, std::uint64_t seed) {
  BatchConfig cfg;
  cfg.model = AvailabilityModel::kSymmetric;
  cfg.universe = q;
  cfg.sender_size = cfg.receiver_size = cfg.common = theta_to_size(q, theta);
  cfg.runs = runs;
  cfg.seed = seed;
  cfg.protocol = Protocol::aligned();
  cfg.max_slots = ttr_bound(cfg.model, cfg.sender_size, cfg.sender_size, cfg.sender_size).value;
  return cfg;
}

std::string describe(const BatchResult& r) {
  return fmt::format("runs={} mean={:.4f} max={} var={:.2f} censored={}", r.stats.runs(),
                     r.stats.mean(), r.stats.max(), r.stats.variance(), r.censored);
}

// 1. Symmetric bound, every choice and offset enumerated.
bool criterion1() {
  const auto start = Clock::now();
  bool bound_ok = true;
  bool tight_ok = true;
  for (int m = 1; m <= 7; ++m) {
    const ChannelSet set = range_set(1, m);
    VerifyOptions opt;  // async: all k, expansions (<= 1e4), permutations, offsets
    const auto rep = verify_symmetric(set, true, opt);
    const auto bound = rep.bound;
    const bool tight = m < 2 || rep.worst_ttr == bound;
    bound_ok = bound_ok && !rep.violated;
    tight_ok = tight_ok && tight;
    info(fmt::format("m={} m_p={} instances={} worst={} bound={} {}{}", m,
                     smallest_prime_geq(m), rep.instances_checked, rep.worst_ttr, bound,
                     rep.violated ? "VIOLATED" : "ok",
                     rep.violated ? fmt::format(" witness k={} offset={} (replay={})",
                                                rep.witness.start_index, rep.witness.offset,
                                                replay(set, set, rep.witness))
                                  : ""));
  }
  for (int m = 1; m <= 7; ++m) {
    VerifyOptions opt;
    opt.protocol = Protocol::aligned();
    opt.protocol.expansion = Expansion::kRandom;
    const auto rep = verify_symmetric(range_set(1, m), true, opt);
    info(fmt::format("[aligned order, zero offset] m={} worst={} bound={}", m, rep.worst_ttr,
                     rep.bound));
  }
  const double elapsed = seconds_since(start);
  const bool pass = bound_ok && tight_ok && elapsed < 300;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C1 symmetric bound 2m_p-1, exhaustive m=1..7: violations={} "
                           "tightness={} ({:.1f}s)\n",
                           bound_ok ? "none" : "found", tight_ok ? "ok" : "not attained",
                           elapsed);
  return pass;
}

// 2. Asymmetric bound, every (m, n, G) with m, n <= 6.
bool criterion2() {
  const auto start = Clock::now();
  std::uint64_t instances = 0, configs = 0, violations = 0, es_cases = 0, os_cases = 0;
  std::uint64_t es_violations = 0, os_violations = 0;
  for (int m = 1; m <= 6; ++m) {
    const auto prime = smallest_prime_geq(m);
    for (int n = 1; n <= 6; ++n) {
      const bool es_case = n % prime == 0;
      for (int g = 1; g <= std::min(m, n); ++g) {
        Slot worst = 0;
        bool violated = false;
        std::int64_t bound = 0;
        // Which sender positions hold the shared channels.
        for (const auto& shared : combinations(m, g)) {
          std::vector<int> receiver;
          for (int pos : shared) receiver.push_back(pos + 1);
          for (int i = 0; i < n - g; ++i) receiver.push_back(100 + i);
          const auto rep = verify_asymmetric(range_set(1, m), ChannelSet::from_ints(receiver));
          ++configs;
          instances += rep.instances_checked;
          worst = std::max(worst, rep.worst_ttr);
          bound = rep.bound;
          violated = violated || rep.violated;
        }
        (es_case ? es_cases : os_cases) += 1;
        if (violated) {
          ++violations;
          (es_case ? es_violations : os_violations) += 1;
          info(fmt::format("VIOLATED m={} n={} G={} ({}-case) worst={} bound={}", m, n, g,
                           es_case ? "ES" : "OS", worst, bound));
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  info(fmt::format("(m,n,G) triples: ES-case={} (violated {}), OS-case={} (violated {}); "
                   "channel layouts={} instances={}",
                   es_cases, es_violations, os_cases, os_violations, configs, instances));
  const bool pass = violations == 0 && es_cases > 0 && os_cases > 0 && elapsed < 900;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C2 asymmetric bound 2m_p n-2G+2, exhaustive m,n<=6: violated "
                           "triples={} ({:.1f}s)\n",
                           violations, elapsed);
  return pass;
}

// 3. Golden sequences through the CLI.
bool criterion3() {
  auto capture = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return code == 0 ? out.str() : std::string("exit ") + std::to_string(code);
  };
  const std::string sender = capture({"sequence", "--role", "sender", "--channels", "1,2", "--k",
                                      "2", "--slots", "4"});
  const std::string receiver = capture({"sequence", "--role", "receiver", "--channels", "1,3,4",
                                        "--permutation", "3,4,1", "--slots", "12"});
  const bool s_ok = sender == "slot,channel\n1,2\n2,1\n3,2\n4,1\n";
  const bool r_ok = receiver ==
                    "slot,channel\n1,3\n2,3\n3,4\n4,4\n5,1\n6,1\n7,3\n8,4\n9,4\n10,1\n11,1\n12,3\n";
  const bool pass = s_ok && r_ok;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C3 golden sequences: sender {{1,2}} k=2 {}, receiver {{1,3,4}} "
                           "(3,4,1) {}\n",
                           s_ok ? "ok" : "mismatch", r_ok ? "ok" : "mismatch");
  return pass;
}

// 4. Small theta, Q = 50.
bool criterion4() {
  const auto start = Clock::now();
  const auto r = run_batch(symmetric_batch(50, 0.1, 100000, 2024));
  const double elapsed = seconds_since(start);
  info("aligned protocol: " + describe(r));
  const double rel = std::abs(r.stats.mean() - 4.20) / 4.20;
  const bool pass = r.censored == 0 && r.stats.max() <= 9 && r.stats.max() >= 8 && rel <= 0.15 &&
                    elapsed < 60;

  auto async = symmetric_batch(50, 0.1, 100000, 2024);
  async.protocol = Protocol::async();
  async.max_slots = 1000;
  info("async protocol (contrast, not graded): " + describe(run_batch(async)));

  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C4 theta=0.1 Q=50: max={} (need 8..9) mean={:.3f} (4.20 +-15%, "
                           "rel err {:.3f}) ({:.1f}s)\n",
                           r.stats.max(), r.stats.mean(), rel, elapsed);
  return pass;
}

// 5. Moderate theta, Q = 50.
bool criterion5() {
  const auto start = Clock::now();
  const auto r = run_batch(symmetric_batch(50, 0.4, 500000, 2025));
  const double elapsed = seconds_since(start);
  info("aligned protocol: " + describe(r));
  const bool pass = r.censored == 0 && r.stats.max() <= 45 && r.stats.max() >= 40 && elapsed < 120;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C5 theta=0.4 Q=50, 500k runs: max={} (need 40..45) ({:.1f}s)\n",
                           r.stats.max(), elapsed);
  return pass;
}

// 6. Bound table for Q = 60.
bool criterion6() {
  const std::vector<std::int64_t> expected{13, 25, 37, 57, 61, 73, 85, 105};
  std::vector<std::int64_t> got;
  for (int i = 1; i <= 8; ++i) {
    const int m = theta_to_size(60, 0.1 * i);
    got.push_back(ttr_bound(AvailabilityModel::kSymmetric, m, m, m).value);
  }
  const bool pass = got == expected;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C6 Q=60 symmetric bounds: {}\n", fmt::join(got, ","));
  return pass;
}

// 7. Coprimality equivalence and odd/even window permutation.
bool criterion7() {
  std::uint64_t checks = 0, failures = 0;
  for (int y : {2, 3, 5, 7, 11, 13}) {
    for (int x = 1; x <= 200; ++x) {
      ++checks;
      if ((x % y != 0) != coprime(x, y)) ++failures;
    }
  }
  Rng rng(7);
  std::uint64_t windows = 0, window_failures = 0;
  for (int m = 1; m <= 12; ++m) {
    const ChannelSet base = range_set(1, m);
    const auto prime = smallest_prime_geq(m);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ChannelId> extra;
      for (std::int64_t h = m; h < prime; ++h) extra.push_back(base[rng.below(base.size())]);
      for (int k = 1; k <= prime; ++k) {
        const SenderStrategy s(base, extra, k);
        for (Slot w = 1; w <= 4 * prime; ++w) {
          ++windows;
          // m = 2 is excluded by construction: with m_p = 2 a stride of 2 pins
          // every odd (or even) slot to one channel. Expect the check to say so.
          if (check_odd_slot_permutation(s, w) != (m != 2)) ++window_failures;
        }
      }
    }
  }
  const bool pass = failures == 0 && window_failures == 0;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C7 coprime lemma {} checks ({} failures); window permutation {} "
                           "windows ({} failures; m=2 expected non-permutation)\n",
                           checks, failures, windows, window_failures);
  return pass;
}

// 8. Random baseline exceeds the ISAC bound; ISAC never does.
bool criterion8() {
  auto isac_cfg = symmetric_batch(50, 0.1, 100000, 31337);
  isac_cfg.threshold = 9;
  auto random_cfg = isac_cfg;
  random_cfg.algorithm = Algorithm::kRandom;
  random_cfg.max_slots = 1000000;
  const auto isac = run_batch(isac_cfg);
  const auto random = run_batch(random_cfg);
  info("isac:   " + describe(isac) + fmt::format(" above9={}", isac.above_threshold));
  info("random: " + describe(random) + fmt::format(" above9={}", random.above_threshold));
  const bool pass = random.above_threshold > 0 && isac.above_threshold == 0 && isac.censored == 0;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C8 m=n=5, 1e5 runs: random TTR>9 in {} runs, ISAC in {}\n",
                           random.above_threshold, isac.above_threshold);
  return pass;
}

// 9. Byte-identical CSV across thread counts.
bool criterion9() {
  auto csv = [](const std::string& threads) {
    std::vector<std::string> args{"simulate", "--model",  "symmetric", "--Q",     "10:100:10",
                                  "--theta",  "0.1",      "--runs",    "20000",   "--seed",
                                  "42",       "--threads", threads};
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  auto csv_async = [](const std::string& threads) {
    std::vector<std::string> args{"simulate", "--model", "asymmetric", "--Q", "20,40", "--theta",
                                  "0.2", "--G-frac", "0.5", "--protocol", "async", "--runs",
                                  "20000", "--seed", "7", "--max-slots", "100000", "--threads",
                                  threads};
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const auto one = csv("1");
  const auto many = csv("8");
  const auto again = csv("1");
  const auto a1 = csv_async("1");
  const auto a8 = csv_async("8");
  const bool pass = one == many && one == again && a1 == a8 && one.rfind("0\n", 0) == 0;
  std::cout << (pass ? "[PASS]" : "[FAIL]")
            << fmt::format(" C9 determinism: 1 vs 8 threads identical={}, repeat identical={} "
                           "({} bytes)\n",
                           one == many && a1 == a8, one == again, one.size());
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3,
                                                    criterion4, criterion5, criterion6,
                                                    criterion7, criterion8, criterion9};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) selected.push_back(std::stoi(argv[++i]));
  }
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  bool all = true;
  for (int c : selected) {
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << c << '\n';
      return 2;
    }
    all = criteria[static_cast<std::size_t>(c - 1)]() && all;
  }
  return all ? 0 : 1;
}
