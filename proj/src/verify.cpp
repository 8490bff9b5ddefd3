#include "modsums/verify.hpp"

#include "modsums/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace modsums {

namespace {

void check_enumerable(const Configuration& c, int max_n) {
  if (c.size() > std::min(max_n, 62)) {
    throw LimitExceeded("enumerating 2^" + std::to_string(c.size()) +
                        " assignments exceeds the limit n <= " + std::to_string(max_n));
  }
}

// Walks all 2^n assignments in Gray-code order, calling visit(sum mod q)
// once per assignment. `step` is the change in the sum when an element is
// switched on; `start` is the sum of the all-off assignment.
template <class Visit>
void gray_walk(const Configuration& c, std::int64_t start, std::int64_t step_scale, Visit&& visit) {
  const auto q = static_cast<std::int64_t>(c.modulus());
  const int n = c.size();
  std::int64_t s = ((start % q) + q) % q;
  visit(static_cast<Residue>(s));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < total; ++g) {
    const int bit = std::countr_zero(g);
    const bool on = ((g ^ (g >> 1)) >> bit) & 1U;
    const std::int64_t delta = (step_scale * static_cast<std::int64_t>(c[static_cast<std::size_t>(bit)])) % q;
    s = on ? s + delta : s - delta;
    if (s >= q) s -= q;
    if (s < 0) s += q;
    visit(static_cast<Residue>(s));
  }
}

std::int64_t negated_total(const Configuration& c) {
  std::int64_t t = 0;
  for (auto a : c.residues()) t -= static_cast<std::int64_t>(a);
  return t;
}

// Configurations as digit vectors over the ascending reduced residues, in
// odometer (lexicographic) order. With pruning, digit 0 is fixed to the
// smallest residue and digits never decrease.
class ConfigurationOdometer {
 public:
  ConfigurationOdometer(int n, std::size_t radix, bool prune)
      : digits_(static_cast<std::size_t>(n), 0), radix_(radix), prune_(prune) {}

  const std::vector<std::size_t>& digits() const { return digits_; }

  bool advance() {
    const std::size_t first = prune_ ? 1 : 0;
    for (std::size_t i = digits_.size(); i-- > first;) {
      if (digits_[i] + 1 < radix_) {
        ++digits_[i];
        for (std::size_t j = i + 1; j < digits_.size(); ++j) digits_[j] = prune_ ? digits_[i] : 0;
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::size_t> digits_;
  std::size_t radix_;
  bool prune_;
};

struct Candidate {
  bool found = false;
  std::uint64_t score = 0;
  std::uint64_t index = 0;
  std::vector<Residue> configuration;
  std::vector<Residue> target;
};

// Better score wins; ties go to the earlier configuration.
bool better(const Candidate& a, const Candidate& b, Extremum e) {
  if (!b.found) return a.found;
  if (!a.found) return false;
  if (a.score != b.score) return e == Extremum::max ? a.score > b.score : a.score < b.score;
  return a.index < b.index;
}

struct SweepSpec {
  int n;
  Modulus q;
  int k;
  Extremum extremum;
  SumKind kind;
};

Candidate sweep_worker(const SweepSpec& spec, const SweepOptions& options, unsigned worker,
                       unsigned workers) {
  const auto residues = reduced_residues(spec.q);
  ConfigurationOdometer odometer(spec.n, residues.size(), options.prune);
  const auto k = static_cast<std::size_t>(spec.k);
  Candidate best;
  std::vector<Residue> values(static_cast<std::size_t>(spec.n));
  std::vector<Residue> combo(k);
  std::uint64_t index = 0;
  do {
    if (index++ % workers != worker) continue;
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = residues[odometer.digits()[i]];
    const Configuration c(spec.q, values);
    const auto dist = spec.kind == SumKind::subset ? brute_distribution(c, options.max_n)
                                                   : brute_signed_distribution(c, options.max_n);

    for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<Residue>(i);
    while (true) {
      std::uint64_t score = 0;
      for (auto r : combo) score += dist[r];
      const bool improves = !best.found ||
                            (spec.extremum == Extremum::max ? score > best.score : score < best.score);
      if (improves) {
        best.found = true;
        best.score = score;
        best.index = index - 1;
        best.configuration = values;
        best.target = combo;
      }
      // next k-subset of [0, q) in lexicographic order
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == spec.q - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  } while (odometer.advance());
  return best;
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options, BigInt formula) {
  if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
  if (spec.n > options.max_n) {
    throw LimitExceeded("sweep over n=" + std::to_string(spec.n) + " exceeds the limit n <= " +
                        std::to_string(options.max_n));
  }
  const auto configs = sweep_configuration_count(spec.n, spec.q, options.prune);
  const BigInt pairs = configs * binom(static_cast<int>(spec.q), spec.k);
  if (pairs > options.budget) {
    throw LimitExceeded("sweep needs " + pairs.str() + " (configuration, target) evaluations; budget is " +
                        std::to_string(options.budget));
  }

  const unsigned workers = std::max(1U, options.threads);
  std::vector<Candidate> partial(workers);
  if (workers == 1) {
    partial[0] = sweep_worker(spec, options, 0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = sweep_worker(spec, options, w, workers); });
    }
  }
  Candidate best;
  for (auto& c : partial) {
    if (better(c, best, spec.extremum)) best = std::move(c);
  }

  SweepResult r;
  r.n = spec.n;
  r.q = spec.q;
  r.k = spec.k;
  r.extremum = spec.extremum;
  r.kind = spec.kind;
  r.formula_bound = std::move(formula);
  r.observed = best.score;
  r.witness = Configuration(spec.q, best.configuration);
  std::vector<std::int64_t> target(best.target.begin(), best.target.end());
  r.witness_target = ResidueSet(spec.q, target);
  r.evaluated = static_cast<std::uint64_t>(pairs);
  r.agree = r.observed == r.formula_bound;
  return r;
}

void check_k(int k, Modulus q) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<std::uint64_t>(k) > q) throw std::invalid_argument("k exceeds q");
}

}  // namespace

std::vector<std::uint64_t> brute_distribution(const Configuration& c, int max_n) {
  check_enumerable(c, max_n);
  std::vector<std::uint64_t> counts(c.modulus(), 0);
  gray_walk(c, 0, 1, [&](Residue s) { ++counts[s]; });
  return counts;
}

std::vector<std::uint64_t> brute_signed_distribution(const Configuration& c, int max_n) {
  check_enumerable(c, max_n);
  std::vector<std::uint64_t> counts(c.modulus(), 0);
  gray_walk(c, negated_total(c), 2, [&](Residue s) { ++counts[s]; });
  return counts;
}

BigInt brute_count(const Configuration& c, const ResidueSet& p, int max_n) {
  if (c.modulus() != p.modulus()) throw std::invalid_argument("modulus mismatch");
  check_enumerable(c, max_n);
  std::uint64_t hits = 0;
  gray_walk(c, 0, 1, [&](Residue s) { hits += p.contains(s); });
  return hits;
}

BigInt brute_signed_count(const Configuration& c, const ResidueSet& p, int max_n) {
  if (c.modulus() != p.modulus()) throw std::invalid_argument("modulus mismatch");
  check_enumerable(c, max_n);
  std::uint64_t hits = 0;
  gray_walk(c, negated_total(c), 2, [&](Residue s) { hits += p.contains(s); });
  return hits;
}

std::vector<Residue> reduced_residues(Modulus q) {
  if (q < 1) throw std::invalid_argument("modulus q must be at least 1");
  if (q == 1) return {0};
  std::vector<Residue> r;
  for (Residue a = 1; a < q; ++a) {
    if (is_reduced(a, q)) r.push_back(a);
  }
  return r;
}

const char* to_string(Extremum e) { return e == Extremum::max ? "max" : "min"; }

BigInt sweep_configuration_count(int n, Modulus q, bool prune) {
  const auto units = static_cast<int>(reduced_residues(q).size());
  if (n == 0) return 1;
  if (!prune) return boost::multiprecision::pow(BigInt(units), static_cast<unsigned>(n));
  // a_1 fixed, a_2..a_n a multiset drawn from the units
  return binom(n - 1 + units - 1, n - 1);
}

SweepResult exhaustive_max(int n, Modulus q, int k, const SweepOptions& options) {
  check_k(k, q);
  return run_sweep({n, q, k, Extremum::max, SumKind::subset}, options, theorem1_bound(n, k, q));
}

SweepResult exhaustive_min_class(int n, Modulus q, const SweepOptions& options) {
  auto formula = corollary2_bound(n, q);
  return run_sweep({n, q, 1, Extremum::min, SumKind::subset}, options, std::move(formula));
}

SweepResult exhaustive_signed_max(int n, Modulus q, int k, const SweepOptions& options) {
  check_k(k, q);
  return run_sweep({n, q, k, Extremum::max, SumKind::signed_sums}, options,
                   corollary3_bound(n, k, q));
}

UniformityReport uniformity_report(const Configuration& c) {
  UniformityReport r;
  r.n = c.size();
  r.q = c.modulus();
  r.counts = subset_sum_distribution(c).counts;
  const BigInt total = pow2(static_cast<unsigned>(r.n));
  const auto [lo, hi] = std::minmax_element(r.counts.begin(), r.counts.end());
  r.min_share = Rational(*lo, total);
  r.max_share = Rational(*hi, total);
  const Rational uniform(1, r.q);
  r.max_deviation = 0;
  for (const auto& count : r.counts) {
    Rational dev = Rational(count, total) - uniform;
    if (dev < 0) dev = -dev;
    if (dev > r.max_deviation) r.max_deviation = dev;
  }
  return r;
}

UniformityReport uniformity_report(int n, Modulus q) {
  return uniformity_report(Configuration::all_ones(n, q));
}

}  // namespace modsums
