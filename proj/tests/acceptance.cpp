// Acceptance suite: one PASS/FAIL line per criterion, exact equality
// throughout. Exit status is the number of failing criteria.

#include "modsums/core_math.hpp"
#include "modsums/extremal.hpp"
#include "modsums/structures.hpp"
#include "modsums/verify.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>

using namespace modsums;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::uint64_t checks = 0;

  // The message is only built when the check fails.
  template <class Message>
  void expect(bool ok, Message&& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      if constexpr (std::is_invocable_v<Message>) {
        detail = what();
      } else {
        detail = what;
      }
    }
  }
};

std::vector<std::size_t> sorted_sizes(const StructurePartition& p) {
  auto s = p.block_sizes();
  std::sort(s.begin(), s.end());
  return s;
}

ResidueSet from_bits(Modulus q, std::uint32_t bits) {
  std::vector<std::int64_t> m;
  for (Modulus r = 0; r < q; ++r) {
    if ((bits >> r) & 1U) m.push_back(r);
  }
  return ResidueSet(q, m);
}

// Theorem 1 sharpness on the full grid q in 2..6, n in 1..8, k in 1..q.
Outcome formula_vs_brute_force() {
  Outcome o;
  for (Modulus q = 2; q <= 6; ++q) {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= static_cast<int>(q); ++k) {
        const auto r = exhaustive_max(n, q, k);
        std::ostringstream what;
        what << "n=" << n << " q=" << q << " k=" << k << ": observed " << r.observed << ", formula "
             << r.formula_bound;
        o.expect(r.agree && r.observed == theorem1_bound(n, k, q), what.str());
      }
    }
  }
  return o;
}

Outcome wraparound() {
  Outcome o;
  const auto r = exhaustive_max(6, 3, 1);
  o.expect(r.observed == 22 && r.agree, "sweep maximum for n=6, q=3, k=1 is " + r.observed.str());
  o.expect(r.observed > binom(6, 3), "maximum does not exceed C(6,3)");
  o.expect(binom(6, 3) == 20, "C(6,3) != 20");
  const auto witness = Configuration::from_integers(3, {1, 1, 1, -1, -1, -1});
  const ResidueSet zero(3, {0});
  o.expect(brute_count(witness, zero) == 22, "witness (1,1,1,-1,-1,-1) does not reach 22");
  const auto split = split_extremal(6, 1, 3);
  o.expect(split.configuration == witness && split.target == zero && split.claimed == 22,
           "split generator does not produce the (1,1,1,-1,-1,-1) witness");
  return o;
}

Outcome corollary1_regime() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    const auto half = static_cast<Modulus>((n + 1) / 2);
    for (Modulus q = half + 1; q <= half + 4; ++q) {
      const auto central = binom(n, n / 2);
      o.expect(theorem1_bound(n, 1, q) == central,
               "theorem1_bound(" + std::to_string(n) + ",1," + std::to_string(q) + ") != C(n, n/2)");
      if (n <= 8) {
        const auto r = exhaustive_max(n, q, 1);
        o.expect(r.agree && r.observed == central,
                 "sweep n=" + std::to_string(n) + " q=" + std::to_string(q) + " gives " + r.observed.str());
      }
    }
  }
  return o;
}

// Criteria 4 and 5 share one pass over every reduced configuration.
struct CertificateOutcome {
  Outcome certificate;
  Outcome independence;
};

CertificateOutcome certificate_suite() {
  CertificateOutcome out;
  std::mt19937_64 rng(20260101);
  std::uint64_t configurations = 0;
  for (Modulus q = 1; q <= 6; ++q) {
    std::vector<BigInt> formula(q + 1);
    std::uniform_int_distribution<std::uint32_t> pick(1, (1U << q) - 1);
    std::vector<ResidueSet> targets{ResidueSet(q)};
    for (std::uint32_t bits = 1; bits < (1U << q); ++bits) targets.push_back(from_bits(q, bits));
    for (int n = 0; n <= 10; ++n) {
      for (int k = 1; k <= static_cast<int>(q); ++k) formula[static_cast<std::size_t>(k)] = theorem1_bound(n, k, q);
      const auto expected_blocks = mod_binomial(n, n / 2, q);
      const auto reference = sorted_sizes(build_partition(Configuration::all_ones(n, q)));

      oracle::for_each_configuration(q, n, [&](const std::vector<Residue>& a) {
        ++configurations;
        const Configuration c(q, a);
        const auto p = build_partition(c);
        const auto check = verify_partition(p);
        auto& cert = out.certificate;
        if (!check.ok()) {
          cert.expect(false, c.to_string() + ": " + check.detail);
          return;
        }
        cert.expect(BigInt(p.block_count()) == expected_blocks, [&] { return c.to_string() + ": block count"; });
        std::vector<BigInt> bound(q + 1);
        for (int k = 1; k <= static_cast<int>(q); ++k) {
          bound[static_cast<std::size_t>(k)] = partition_bound(p, k);
          cert.expect(bound[static_cast<std::size_t>(k)] == formula[static_cast<std::size_t>(k)], [&] {
            return c.to_string() + ": certificate differs from formula at k=" + std::to_string(k);
          });
        }
        const auto dist = subset_sum_distribution(c);
        auto dominated = [&](const ResidueSet& target) {
          cert.expect(count_in_set(dist, target) <= bound[static_cast<std::size_t>(target.size())],
                      [&] { return c.to_string() + ": count for " + target.to_string() + " exceeds certificate"; });
        };
        if (n <= 6) {
          for (std::uint32_t bits = 1; bits < (1U << q); ++bits) dominated(targets[bits]);
        }
        for (int draw = 0; draw < 1000; ++draw) dominated(targets[pick(rng)]);

        out.independence.expect(sorted_sizes(p) == reference,
                                [&] { return c.to_string() + ": block sizes differ from all-ones"; });
      });
    }
  }
  out.certificate.detail = out.certificate.pass ? std::to_string(configurations) + " configurations"
                                                : out.certificate.detail;
  out.independence.detail = out.independence.pass ? std::to_string(configurations) + " configurations"
                                                  : out.independence.detail;
  return out;
}

Outcome corollary2() {
  Outcome o;
  for (Modulus q = 1; q <= 6; ++q) {
    for (int n = static_cast<int>(q) - 1; n <= 8; ++n) {
      const auto r = exhaustive_min_class(n, q);
      const auto bound = corollary2_bound(n, q);
      o.expect(r.agree && r.observed == bound,
               "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": sweep min " + r.observed.str() +
                   ", formula " + bound.str());
      const auto e = corollary2_extremal(n, q);
      o.expect(e.claimed == bound && brute_count(e.configuration, e.target) == bound,
               "minimum-class generator misses the bound at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome corollary3() {
  Outcome o;
  for (Modulus q = 1; q <= 6; ++q) {
    for (int n = 0; n <= 8; ++n) {
      for (int k = 1; k <= static_cast<int>(q); ++k) {
        const auto r = exhaustive_signed_max(n, q, k);
        o.expect(r.agree && r.observed == corollary3_bound(n, k, q),
                 "n=" + std::to_string(n) + " q=" + std::to_string(q) + " k=" + std::to_string(k) +
                     ": sweep " + r.observed.str() + ", formula " + r.formula_bound.str());
      }
    }
  }
  auto agrees = [&](const Configuration& c) {
    const auto fast = signed_sum_distribution(c);
    const auto slow = brute_signed_distribution(c);
    for (Modulus s = 0; s < c.modulus(); ++s) {
      o.expect(fast.counts[s] == slow[s], [&] { return c.to_string() + ": signed distribution differs from enumeration"; });
    }
  };
  for (Modulus q = 1; q <= 9; ++q) {
    for (int n = 0; n <= 12; ++n) agrees(Configuration::all_ones(n, q));
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const auto q = static_cast<Modulus>(std::uniform_int_distribution<int>(1, 9)(rng));
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    agrees(Configuration(q, oracle::random_configuration(rng, q, n)));
  }
  return o;
}

Outcome uniformity() {
  Outcome o;
  const auto r = uniformity_report(100, 7);
  o.expect(r.max_deviation < Rational(1, 1000), "deviation " + r.max_deviation.str() + " is not below 1/1000");
  BigInt total = 0;
  for (const auto& c : r.counts) total += c;
  o.expect(total == pow2(100), "class counts do not sum to 2^100");
  o.detail = "max deviation = " + r.max_deviation.str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 500; ++trial) {
    const auto q = static_cast<Modulus>(std::uniform_int_distribution<int>(1, 9)(rng));
    const int n = std::uniform_int_distribution<int>(0, 14)(rng);
    const Configuration c(q, oracle::random_configuration(rng, q, n));
    const auto fast = subset_sum_distribution(c);
    const auto slow = brute_distribution(c);
    for (Modulus s = 0; s < q; ++s) {
      o.expect(fast.counts[s] == slow[s], [&] { return c.to_string() + ": distributions differ"; });
    }
  }
  return o;
}

Outcome lemma() {
  Outcome o;
  for (Modulus q = 1; q <= 8; ++q) {
    for (std::uint32_t bits = 1; bits < (1U << q); ++bits) {
      const auto s = from_bits(q, bits);
      for (auto a : reduced_residues(q)) {
        o.expect(lemma_shift_check(s, a) == (s.size() == static_cast<int>(q)),
                 [&] { return "S=" + s.to_string() + " a=" + std::to_string(a) + " mod " + std::to_string(q); });
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const char* title, const Outcome& o, double seconds) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << o.checks << " checks, "
              << seconds << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  };
  auto timed = [&](const char* id, const char* title, const std::function<Outcome()>& f) {
    const auto start = std::chrono::steady_clock::now();
    const auto o = f();
    report(id, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  };

  timed("AC1", "Theorem 1 bound equals exhaustive maximum, q 2..6, n 1..8, all k", formula_vs_brute_force);
  timed("AC2", "wraparound n=6 q=3 k=1 gives 22 > C(6,3) with witness (1,1,1,-1,-1,-1)", wraparound);
  timed("AC3", "q > ceil(n/2) gives C(n, floor(n/2)), n <= 12; sweeps at n <= 8", corollary1_regime);
  {
    const auto start = std::chrono::steady_clock::now();
    const auto both = certificate_suite();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report("AC4", "certificate partitions verified and tight, every configuration n <= 10, q <= 6",
           both.certificate, s);
    report("AC5", "block-size multiset independent of residues, n <= 10, q <= 6", both.independence, s);
  }
  timed("AC6", "minimum class equals corollary bound, q <= 6, q-1 <= n <= 8", corollary2);
  timed("AC7", "signed maximum equals mod-r bound; signed kernel matches enumeration", corollary3);
  timed("AC8", "all-ones q=7 n=100 deviation from 1/7 below 1e-3 (exact)", uniformity);
  timed("AC9", "convolution equals enumeration, 500 random configurations n <= 14, q <= 9", oracle_equivalence);
  timed("AC10", "S + a = S iff S = Z_q, exhaustive q <= 8", lemma);

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: " + std::to_string(failures))
            << std::endl;
  return failures;
}
