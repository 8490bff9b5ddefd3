#include "cli.hpp"

#include "modsums/core_math.hpp"
#include "modsums/errors.hpp"
#include "modsums/extremal.hpp"
#include "modsums/structures.hpp"
#include "modsums/verify.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace modsums::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Envelope {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  int status = kOk;
};

Json big(const BigInt& v) { return v.str(); }

Json rational(const Rational& r) {
  return Json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

std::string decimal_approximation(const Rational& r) {
  // 15 significant digits, for display only; the exact pair is authoritative
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float value = Float(boost::multiprecision::numerator(r)) /
                      Float(boost::multiprecision::denominator(r));
  std::ostringstream s;
  s << std::setprecision(15) << value;
  return s.str();
}

template <class Range>
Json int_array(const Range& values) {
  Json a = Json::array();
  for (auto v : values) a.push_back(v);
  return a;
}

Json big_array(const std::vector<BigInt>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(big(v));
  return a;
}

template <class Range>
Json count_array(const Range& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(std::to_string(v));
  return a;
}

Json configuration_json(const Configuration& c) {
  return Json{{"q", c.modulus()}, {"a", int_array(c.residues())}};
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> values;
  if (text.empty()) return values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + token + "' in list '" + text + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "' in list '" + text + "'");
    values.push_back(v);
  }
  if (text.back() == ',') throw std::invalid_argument("trailing comma in list '" + text + "'");
  return values;
}

Modulus checked_modulus(long long q) {
  if (q < 1 || q > static_cast<long long>(UINT32_MAX)) {
    throw std::invalid_argument("q must be in [1, 2^32)");
  }
  return static_cast<Modulus>(q);
}

// --limit wins over MODSUMS_LIMIT, which wins over the built-in default.
int resolve_limit(const std::optional<int>& flag, int fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MODSUMS_LIMIT"); env && *env) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("MODSUMS_LIMIT is not a non-negative integer: '") + env + "'");
  }
  return fallback;
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out << path << "\t\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out << path << '\t' << j.get<std::string>() << '\n';
  } else {
    out << path << '\t' << j.dump() << '\n';
  }
}

void emit(const Envelope& e, const std::string& format, std::ostream& out) {
  Json doc{{"command", e.command}, {"parameters", e.parameters}, {"result", e.result}};
  if (format == "tsv") {
    flatten(doc, "", out);
  } else {
    out << doc.dump(2) << '\n';
  }
}

Json bound_witness_json(const BoundWitness& w) {
  return Json{{"q", w.configuration.modulus()},
              {"a", int_array(w.configuration.residues())},
              {"target", int_array(w.target.members())},
              {"sums", to_string(w.kind)}};
}

Json sweep_json(const SweepResult& r) {
  return Json{{"n", r.n},
              {"q", r.q},
              {"k", r.k},
              {"extremum", to_string(r.extremum)},
              {"sums", to_string(r.kind)},
              {"formula_bound", big(r.formula_bound)},
              {"observed", big(r.observed)},
              {"witness", configuration_json(r.witness)},
              {"witness_target", int_array(r.witness_target.members())},
              {"evaluated", std::to_string(r.evaluated)},
              {"agree", r.agree}};
}

Json size_histogram(const std::vector<std::size_t>& sizes) {
  std::map<std::size_t, std::size_t> hist;
  for (auto s : sizes) ++hist[s];
  Json h = Json::object();
  for (auto [size, count] : hist) h[std::to_string(size)] = count;
  return h;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds for sums of reduced residues mod q", "modsums"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound");
  std::string bound_kind = "theorem1";
  int bound_n = 0, bound_k = 1;
  long long bound_q = 1;
  bool bound_witness = false;
  bound->add_option("--kind", bound_kind, "theorem1 | cor2 | cor3")
      ->check(CLI::IsMember({"theorem1", "cor2", "cor3"}))
      ->capture_default_str();
  bound->add_option("--n", bound_n, "Number of residues")->required()->check(CLI::NonNegativeNumber);
  bound->add_option("--k", bound_k, "Target set size")->capture_default_str();
  bound->add_option("--q", bound_q, "Modulus")->required();
  bound->add_flag("--witness", bound_witness, "Attach a configuration attaining the bound");

  // dist
  auto* dist = app.add_subcommand("dist", "Exact sum distribution of a configuration");
  long long dist_q = 1;
  std::string dist_a;
  bool dist_signed = false;
  dist->add_option("--q", dist_q, "Modulus")->required();
  dist->add_option("--a", dist_a, "Comma-separated residues")->required()->allow_extra_args(false);
  dist->add_flag("--signed", dist_signed, "Use coefficients +1/-1 instead of 0/1");

  // partition
  auto* part = app.add_subcommand("partition", "Build and verify the structure partition");
  long long part_q = 1;
  std::string part_a, part_output, part_check;
  std::optional<int> part_cert, part_limit;
  bool part_blocks = false;
  auto* part_q_opt = part->add_option("--q", part_q, "Modulus");
  auto* part_a_opt = part->add_option("--a", part_a, "Comma-separated residues");
  auto* part_check_opt = part->add_option("--check", part_check, "Verify an existing partition file");
  part_check_opt->excludes(part_q_opt)->excludes(part_a_opt);
  part->add_option("--cert-bound", part_cert, "Also evaluate sum_j min(k, |block j|) for this k");
  part->add_option("--output", part_output, "Write the partition file here");
  part->add_option("--limit", part_limit, "Largest n to enumerate (default 24)");
  part->add_flag("--blocks", part_blocks, "Include every block in the output");

  // extremal
  auto* ext = app.add_subcommand("extremal", "Emit a configuration attaining a bound");
  std::string ext_kind = "split";
  int ext_n = 0, ext_k = 1;
  long long ext_q = 1;
  ext->add_option("--kind", ext_kind, "allones | split | cor2")
      ->check(CLI::IsMember({"allones", "split", "cor2"}))
      ->capture_default_str();
  ext->add_option("--n", ext_n, "Number of residues")->required()->check(CLI::NonNegativeNumber);
  ext->add_option("--k", ext_k, "Target set size")->capture_default_str();
  ext->add_option("--q", ext_q, "Modulus")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Exhaustive sweeps against the closed forms");
  std::string ver_kind = "max";
  int n_min = 0, n_max = 0;
  long long q_min = 2, q_max = 2;
  std::optional<int> ver_k, ver_limit;
  std::uint64_t budget = SweepOptions{}.budget;
  bool no_prune = false;
  unsigned threads = 1;
  ver->add_option("--kind", ver_kind, "max | min | signed")
      ->check(CLI::IsMember({"max", "min", "signed"}))
      ->capture_default_str();
  ver->add_option("--n-min", n_min, "Smallest n")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--q-min", q_min, "Smallest q")->required();
  ver->add_option("--q-max", q_max, "Largest q")->required();
  ver->add_option("--k", ver_k, "Target set size (default: every 1..q)");
  ver->add_option("--budget", budget, "Maximum (configuration, target) evaluations per sweep")
      ->capture_default_str();
  ver->add_flag("--no-prune", no_prune, "Disable symmetry pruning");
  ver->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  ver->add_option("--limit", ver_limit, "Largest n to enumerate (default 16)");

  // uniformity
  auto* uni = app.add_subcommand("uniformity", "Deviation of the sum distribution from uniform");
  int uni_n = 0;
  long long uni_q = 1;
  std::string uni_a;
  auto* uni_n_opt = uni->add_option("--n", uni_n, "Number of ones")->check(CLI::NonNegativeNumber);
  uni->add_option("--q", uni_q, "Modulus")->required();
  auto* uni_a_opt = uni->add_option("--a", uni_a, "Comma-separated residues instead of all ones");
  uni_a_opt->excludes(uni_n_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kBadArguments;
  }

  Envelope env;
  try {
    if (bound->parsed()) {
      env.command = "bound";
      const auto q = checked_modulus(bound_q);
      env.parameters = {{"kind", bound_kind}, {"n", bound_n}, {"k", bound_k}, {"q", q}};
      BoundReport report;
      if (bound_kind == "theorem1") {
        report.value = theorem1_bound(bound_n, bound_k, q);
        if (bound_witness) {
          auto inst = split_extremal(bound_n, bound_k, q);
          report.witness = BoundWitness{inst.configuration, inst.target, SumKind::subset};
        }
      } else if (bound_kind == "cor2") {
        env.parameters.erase("k");
        report.value = corollary2_bound(bound_n, q);
        if (bound_witness) {
          auto inst = corollary2_extremal(bound_n, q);
          report.witness = BoundWitness{inst.configuration, inst.target, SumKind::subset};
        }
      } else {
        report.value = corollary3_bound(bound_n, bound_k, q);
        if (bound_witness) throw std::invalid_argument("--witness is available for theorem1 and cor2");
      }
      env.result = {{"value", big(report.value)}, {"method", to_string(report.method)}};
      if (report.witness) {
        env.result["witness"] = bound_witness_json(*report.witness);
        env.result["witness_consistent"] = report.witness_consistent();
        if (!report.witness_consistent()) env.status = kDisagreement;
      }
    } else if (dist->parsed()) {
      env.command = "dist";
      const auto q = checked_modulus(dist_q);
      const auto c = Configuration::from_integers(q, parse_list(dist_a));
      env.parameters = {{"q", q}, {"a", int_array(c.residues())}, {"signed", dist_signed}};
      const auto d = dist_signed ? signed_sum_distribution(c) : subset_sum_distribution(c);
      env.result = {{"counts", big_array(d.counts)}, {"total", big(d.total())}};
    } else if (part->parsed()) {
      env.command = "partition";
      const int limit = resolve_limit(part_limit, PartitionOptions{}.max_n);
      std::optional<StructurePartition> p;
      if (!part_check.empty()) {
        env.parameters = {{"check", part_check}};
        std::ifstream file(part_check);
        if (!file) throw std::invalid_argument("cannot open partition file '" + part_check + "'");
        p = read_partition(file);
      } else {
        if (part_q_opt->count() == 0 || part_a_opt->count() == 0) {
          throw std::invalid_argument("partition needs --q and --a, or --check <file>");
        }
        const auto q = checked_modulus(part_q);
        const auto c = Configuration::from_integers(q, parse_list(part_a));
        env.parameters = {{"q", q}, {"a", int_array(c.residues())}};
        p = build_partition(c, PartitionOptions{limit});
      }
      if (part_cert) env.parameters["cert_bound"] = *part_cert;

      const auto check = verify_partition(*p);
      env.result = {{"n", p->n()},
                    {"q", p->modulus()},
                    {"a", int_array(p->configuration().residues())},
                    {"block_count", std::to_string(check.block_count)},
                    {"expected_block_count", big(check.expected_block_count)},
                    {"block_sizes", size_histogram(p->block_sizes())},
                    {"verified", check.ok()},
                    {"violation", to_string(check.violation)},
                    {"detail", check.detail}};
      if (part_cert) {
        env.result["cert_bound"] = {{"k", *part_cert},
                                    {"value", big(partition_bound(*p, *part_cert))},
                                    {"method", to_string(BoundMethod::partition)}};
      }
      if (part_blocks) {
        Json blocks = Json::array();
        for (std::size_t b = 0; b < p->block_count(); ++b) {
          const auto block = p->block(b);
          Json members = Json::array();
          for (auto m : block.members) members.push_back(m.bits);
          blocks.push_back({{"masks", members}, {"sums", int_array(block.sums)}});
        }
        env.result["blocks"] = blocks;
      }
      if (!part_output.empty()) {
        std::ofstream file(part_output);
        if (!file) throw std::invalid_argument("cannot write '" + part_output + "'");
        write_partition(file, *p);
        env.result["output"] = part_output;
      }
      if (!check.ok()) env.status = kDisagreement;
    } else if (ext->parsed()) {
      env.command = "extremal";
      const auto q = checked_modulus(ext_q);
      env.parameters = {{"kind", ext_kind}, {"n", ext_n}, {"k", ext_k}, {"q", q}};
      ExtremalInstance inst;
      if (ext_kind == "allones") {
        inst = allones_extremal(ext_n, ext_k, q);
      } else if (ext_kind == "split") {
        inst = split_extremal(ext_n, ext_k, q);
      } else {
        env.parameters.erase("k");
        inst = corollary2_extremal(ext_n, q);
      }
      env.result = {{"a", int_array(inst.configuration.residues())},
                    {"target", int_array(inst.target.members())},
                    {"claimed", big(inst.claimed)}};
    } else if (ver->parsed()) {
      env.command = "verify";
      const auto qa = checked_modulus(q_min);
      const auto qb = checked_modulus(q_max);
      SweepOptions options;
      options.budget = budget;
      options.prune = !no_prune;
      options.threads = threads;
      options.max_n = resolve_limit(ver_limit, options.max_n);
      env.parameters = {{"kind", ver_kind}, {"n_min", n_min}, {"n_max", n_max},
                        {"q_min", qa},      {"q_max", qb},    {"prune", options.prune},
                        {"budget", std::to_string(budget)}, {"threads", threads}};
      if (ver_k) env.parameters["k"] = *ver_k;

      Json sweeps = Json::array();
      Json skipped = Json::array();
      bool all_agree = true;
      for (auto q = qa; q <= qb; ++q) {
        for (int n = n_min; n <= n_max; ++n) {
          if (ver_kind == "min") {
            if (static_cast<long long>(n) < static_cast<long long>(q) - 1) {
              skipped.push_back({{"n", n}, {"q", q}, {"reason", "n < q - 1"}});
              continue;
            }
            auto r = exhaustive_min_class(n, q, options);
            all_agree = all_agree && r.agree;
            sweeps.push_back(sweep_json(r));
            continue;
          }
          const int k_lo = ver_k ? *ver_k : 1;
          const int k_hi = ver_k ? *ver_k : static_cast<int>(q);
          for (int k = k_lo; k <= k_hi; ++k) {
            auto r = ver_kind == "max" ? exhaustive_max(n, q, k, options)
                                       : exhaustive_signed_max(n, q, k, options);
            all_agree = all_agree && r.agree;
            sweeps.push_back(sweep_json(r));
          }
        }
      }
      env.result = {{"all_agree", all_agree}, {"sweeps", sweeps}};
      if (!skipped.empty()) env.result["skipped"] = skipped;
      if (!all_agree) env.status = kDisagreement;
    } else if (uni->parsed()) {
      env.command = "uniformity";
      const auto q = checked_modulus(uni_q);
      UniformityReport r;
      if (uni_a_opt->count() > 0) {
        const auto c = Configuration::from_integers(q, parse_list(uni_a));
        env.parameters = {{"q", q}, {"a", int_array(c.residues())}};
        r = uniformity_report(c);
      } else {
        env.parameters = {{"n", uni_n}, {"q", q}};
        r = uniformity_report(uni_n, q);
      }
      env.result = {{"n", r.n},
                    {"q", r.q},
                    {"counts", big_array(r.counts)},
                    {"min_share", rational(r.min_share)},
                    {"max_share", rational(r.max_share)},
                    {"max_deviation", rational(r.max_deviation)},
                    {"max_deviation_approx", decimal_approximation(r.max_deviation)}};
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << '\n';
    return kDisagreement;
  }

  emit(env, format, out);
  return env.status;
}

}  // namespace modsums::cli
