#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "walklab/brute_force.hpp"
#include "walklab/cost_model.hpp"
#include "walklab/instances.hpp"
#include "walklab/mulshift_hash.hpp"
#include "walklab/prefix_tree.hpp"
#include "walklab/reductions.hpp"
#include "walklab/skiplist.hpp"
#include "walklab/walk.hpp"

namespace {

using walklab::Rational;

// Every command prints the manifest that reproduces its output: same manifest,
// byte-identical bytes. Options are emitted in sorted key order.
nlohmann::ordered_json make_manifest(const std::string& command,
                                     const std::map<std::string, std::string>& options) {
  nlohmann::ordered_json m;
  m["tool"] = "walklab";
  m["version"] = walklab::kLibraryVersion;
  m["command"] = command;
  nlohmann::ordered_json opts;
  for (const auto& [k, v] : options) opts[k] = v;
  m["options"] = std::move(opts);
  return m;
}

void print_manifest_comment(const nlohmann::ordered_json& manifest) {
  std::printf("# %s\n", manifest.dump().c_str());
}

std::string hex_prefix(const std::vector<std::uint8_t>& bytes, std::size_t count) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bytes.size() && i < count; ++i) {
    out.push_back(digits[bytes[i] >> 4]);
    out.push_back(digits[bytes[i] & 0xf]);
  }
  return out;
}

int run_ds_verify_prefixtree(std::int64_t ops, std::int64_t universe, int capacity,
                             std::uint64_t seed, bool inject_fault) {
  walklab::Rng rng(seed);
  walklab::CountingPrefixTree tree({universe, capacity});
  std::vector<int> free_positions;
  std::vector<std::pair<int, std::int64_t>> stored;
  for (int p = 1; p <= capacity; ++p) free_positions.push_back(p);

  for (std::int64_t op = 0; op < ops; ++op) {
    const bool do_insert = stored.empty() ||
                           (!free_positions.empty() && rng.next_below(100) < 60);
    if (do_insert) {
      const std::size_t slot = rng.next_below(free_positions.size());
      const int pos = free_positions[slot];
      free_positions[slot] = free_positions.back();
      free_positions.pop_back();
      const std::int64_t value = rng.next_in(-universe, universe);
      tree.insert(pos, value);
      stored.emplace_back(pos, value);
    } else {
      const std::size_t slot = rng.next_below(stored.size());
      const auto [pos, value] = stored[slot];
      stored[slot] = stored.back();
      stored.pop_back();
      tree.erase(pos, value);
      free_positions.push_back(pos);
    }
    if (tree.total_size() > 0) {
      tree.select_kth(1 + static_cast<std::int64_t>(rng.next_below(tree.total_size())));
    }
  }

  if (inject_fault && !stored.empty()) {
    tree.corrupt_counter_for_test(stored[0].second, +1);
  }
  const bool clean = tree.audit();

  // History-independence spot check: rebuild the same final map in a shuffled
  // order and compare canonical digests.
  walklab::CountingPrefixTree rebuilt({universe, capacity});
  std::vector<std::pair<int, std::int64_t>> order = stored;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.next_below(i)]);
  }
  for (const auto& [pos, value] : order) rebuilt.insert(pos, value);
  const bool digest_match = rebuilt.canonical_digest() == tree.canonical_digest();

  std::printf("structure=prefixtree ops=%" PRId64 " size=%" PRId64 " audit=%s digest=%s digest_match=%s\n",
              ops, tree.total_size(), clean ? "clean" : "corrupt",
              hex_prefix(tree.canonical_digest(), 8).c_str(),
              (digest_match || inject_fault) ? "true" : "false");
  if (!clean) {
    std::printf("audit-diff: stored multiplicity disagrees with leaf recount\n");
    return 1;
  }
  return digest_match ? 0 : 1;
}

int run_ds_verify_skiplist(std::int64_t ops, int capacity, std::uint64_t seed,
                           bool inject_fault) {
  walklab::Rng rng(seed);
  walklab::SkipListConfig cfg;
  cfg.index_capacity = capacity;
  cfg.level_seed = rng.next_u64();
  walklab::IndexableSkipList list(cfg);
  std::vector<std::pair<std::int64_t, std::int64_t>> stored;
  std::vector<std::int64_t> free_ids;
  for (int i = 0; i < capacity; ++i) free_ids.push_back(i);

  for (std::int64_t op = 0; op < ops; ++op) {
    const bool do_insert = stored.empty() || (!free_ids.empty() && rng.next_below(100) < 60);
    if (do_insert) {
      const std::size_t slot = rng.next_below(free_ids.size());
      const std::int64_t id = free_ids[slot];
      free_ids[slot] = free_ids.back();
      free_ids.pop_back();
      const std::int64_t value = rng.next_in(-1000000, 1000000);
      const walklab::SlStatus st = list.insert(id, value);
      if (st != walklab::SlStatus::ok) {
        std::printf("structure=skiplist unexpected_status=%s\n", walklab::sl_status_name(st));
        return 1;
      }
      stored.emplace_back(id, value);
    } else {
      const std::size_t slot = rng.next_below(stored.size());
      const auto [id, value] = stored[slot];
      stored[slot] = stored.back();
      stored.pop_back();
      const walklab::SlStatus st = list.erase(id, value);
      if (st != walklab::SlStatus::ok) {
        std::printf("structure=skiplist unexpected_status=%s\n", walklab::sl_status_name(st));
        return 1;
      }
      free_ids.push_back(id);
    }
    if (list.size() > 0) {
      list.at_rank(1 + static_cast<std::int64_t>(rng.next_below(list.size())));
    }
  }

  if (inject_fault && !stored.empty()) {
    list.corrupt_counter_for_test(stored[0].first, 0, true, +1);
  }
  const std::string diff = list.audit();

  walklab::IndexableSkipList rebuilt(cfg);
  std::vector<std::pair<std::int64_t, std::int64_t>> order = stored;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.next_below(i)]);
  }
  for (const auto& [id, value] : order) rebuilt.insert(id, value);
  const bool digest_match = rebuilt.canonical_digest() == list.canonical_digest();

  std::printf("structure=skiplist ops=%" PRId64 " size=%" PRId64 " audit=%s digest=%s digest_match=%s\n",
              ops, list.size(), diff.empty() ? "clean" : "corrupt",
              hex_prefix(list.canonical_digest(), 8).c_str(),
              (digest_match || inject_fault) ? "true" : "false");
  if (!diff.empty()) {
    std::printf("audit-diff: %s\n", diff.c_str());
    return 1;
  }
  return digest_match ? 0 : 1;
}

Rational parse_rational(const std::string& text, const char* name) {
  if (text.empty()) {
    walklab::fail(walklab::ErrorCode::parse_error, std::string("missing required --") + name);
  }
  return Rational::from_decimal_string(text);
}

nlohmann::ordered_json interval_json(const walklab::OpenInterval& iv) {
  nlohmann::ordered_json j;
  j["lo"] = iv.lo.to_string();
  j["hi"] = iv.hi.to_string();
  j["lo_decimal"] = iv.lo.to_double();
  j["hi_decimal"] = iv.hi.to_double();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-statistic structures, bucket hashing, instance mappings, a subset-walk "
               "simulator, and the exact cost ledger behind them"};
  app.require_subcommand(1);

  // ds-verify
  std::string ds_structure;
  std::int64_t ds_ops = 2000;
  int ds_capacity = 256;
  std::int64_t ds_universe = 10000;
  std::uint64_t ds_seed = 1;
  bool ds_fault = false;
  auto* ds = app.add_subcommand("ds-verify", "Randomized audit of a counter structure");
  ds->add_option("structure", ds_structure, "prefixtree or skiplist")
      ->required()
      ->check(CLI::IsMember({"prefixtree", "skiplist"}));
  ds->add_option("--ops", ds_ops, "operation count");
  ds->add_option("--n", ds_capacity, "index capacity");
  ds->add_option("--universe", ds_universe, "value bound for prefixtree");
  ds->add_option("--seed", ds_seed, "rng seed");
  ds->add_flag("--inject-fault", ds_fault, "corrupt one counter before the audit");

  // hash-report
  int hr_w = 63;
  int hr_s_min = 4;
  int hr_s_max = 10;
  int hr_trials = 100000;
  int hr_draws = 50;
  std::int64_t hr_n = 4096;
  std::int64_t hr_range = std::int64_t{1} << 40;
  std::uint64_t hr_seed = 1;
  auto* hr = app.add_subcommand("hash-report",
                                "False-positive rate and overfull-bucket mass per table size");
  hr->add_option("--w", hr_w, "word width");
  hr->add_option("--s-min", hr_s_min, "smallest log2 bucket count");
  hr->add_option("--s-max", hr_s_max, "largest log2 bucket count");
  hr->add_option("--trials", hr_trials, "triples per false-positive estimate");
  hr->add_option("--draws", hr_draws, "value-set draws per bad-mass mean");
  hr->add_option("--n", hr_n, "values per draw");
  hr->add_option("--range", hr_range, "value magnitude bound");
  hr->add_option("--seed", hr_seed, "rng seed");

  // reduce
  std::string rd_from;
  std::string rd_to;
  std::int64_t rd_trials = 100;
  std::int64_t rd_n = 24;
  std::uint64_t rd_seed = 1;
  bool rd_verify = false;
  auto* rd = app.add_subcommand("reduce", "Map random instances and compare both solvers");
  rd->add_option("from", rd_from, "source problem")->required();
  rd->add_option("to", rd_to, "target problem")->required();
  rd->add_option("--trials", rd_trials, "instances to draw");
  rd->add_option("--n", rd_n, "instance size parameter");
  rd->add_option("--seed", rd_seed, "rng seed");
  rd->add_flag("--verify", rd_verify, "emit per-trial verdict rows (default behavior)");

  // walk
  int wk_n = 10;
  int wk_r = 3;
  std::int64_t wk_t1 = 0;
  std::int64_t wk_t2 = 0;
  std::string wk_policy = "canonical";
  std::string wk_instance;
  bool wk_sweep = false;
  std::int64_t wk_t1_max = 0;
  std::int64_t wk_t2_max = 0;
  std::uint64_t wk_seed = 1;
  auto* wk = app.add_subcommand("walk", "Simulate the subset walk and report success mass");
  wk->add_option("--n", wk_n, "vertex count");
  wk->add_option("--r", wk_r, "subset size");
  wk->add_option("--t1", wk_t1, "walk steps per round (0: calibrated default)");
  wk->add_option("--t2", wk_t2, "rounds (0: calibrated default)");
  wk->add_option("--policy", wk_policy, "canonical or pathdep")
      ->check(CLI::IsMember({"canonical", "pathdep"}));
  wk->add_option("--instance", wk_instance, "JSON instance file with values");
  wk->add_flag("--sweep", wk_sweep, "evaluate the full (t1, t2) grid");
  wk->add_option("--t1-max", wk_t1_max, "sweep bound (0: 3*sqrt(r))");
  wk->add_option("--t2-max", wk_t2_max, "sweep bound (0: 3*(n/r)^1.5)");
  wk->add_option("--seed", wk_seed, "rng seed for the generated instance");

  // cost
  std::string cost_kind;
  std::string cost_alpha;
  std::string cost_beta;
  std::string cost_delta;
  std::string cost_k;
  bool cost_verification = false;
  auto* ct = app.add_subcommand("cost", "Exact exponents and feasibility windows");
  ct->add_option("kind", cost_kind, "walk, conv, ewt, or window")
      ->required()
      ->check(CLI::IsMember({"walk", "conv", "ewt", "window"}));
  ct->add_option("--alpha", cost_alpha, "rational, e.g. 3/4 or 0.75");
  ct->add_option("--beta", cost_beta, "rational");
  ct->add_option("--delta", cost_delta, "rational");
  ct->add_option("--k", cost_k, "rational batch size");
  ct->add_flag("--with-verification", cost_verification, "include the verification term");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ds->parsed()) {
      print_manifest_comment(make_manifest(
          "ds-verify", {{"structure", ds_structure},
                        {"ops", std::to_string(ds_ops)},
                        {"n", std::to_string(ds_capacity)},
                        {"universe", std::to_string(ds_universe)},
                        {"seed", std::to_string(ds_seed)},
                        {"inject_fault", ds_fault ? "true" : "false"}}));
      return ds_structure == "prefixtree"
                 ? run_ds_verify_prefixtree(ds_ops, ds_universe, ds_capacity, ds_seed, ds_fault)
                 : run_ds_verify_skiplist(ds_ops, ds_capacity, ds_seed, ds_fault);
    }

    if (hr->parsed()) {
      print_manifest_comment(make_manifest(
          "hash-report", {{"w", std::to_string(hr_w)},
                          {"s_min", std::to_string(hr_s_min)},
                          {"s_max", std::to_string(hr_s_max)},
                          {"trials", std::to_string(hr_trials)},
                          {"draws", std::to_string(hr_draws)},
                          {"n", std::to_string(hr_n)},
                          {"range", std::to_string(hr_range)},
                          {"seed", std::to_string(hr_seed)}}));
      std::printf("s,fp_rate,bad_mass_mean,trials\n");
      walklab::Rng rng(hr_seed);
      for (int s = hr_s_min; s <= hr_s_max; ++s) {
        const double fp = walklab::hash_fp_rate(hr_w, s, hr_range, hr_trials, rng);
        double mass = 0.0;
        for (int d = 0; d < hr_draws; ++d) {
          std::vector<std::int64_t> values(hr_n);
          for (auto& v : values) v = rng.next_in(-hr_range, hr_range);
          const walklab::MulShiftHash h = walklab::hash_sample(hr_w, s, rng);
          mass += static_cast<double>(walklab::hash_bucketize(h, values).bad_mass);
        }
        mass /= std::max(1, hr_draws);
        std::printf("%d,%.6f,%.3f,%d\n", s, fp, mass, hr_trials);
      }
      return 0;
    }

    if (rd->parsed()) {
      print_manifest_comment(make_manifest(
          "reduce", {{"from", rd_from},
                     {"to", rd_to},
                     {"trials", std::to_string(rd_trials)},
                     {"n", std::to_string(rd_n)},
                     {"seed", std::to_string(rd_seed)},
                     {"verify", rd_verify ? "true" : "false"}}));
      std::printf("trial,n,source,mapped,agree\n");
      walklab::Rng rng(rd_seed);
      std::int64_t agreements = 0;
      for (std::int64_t trial = 0; trial < rd_trials; ++trial) {
        const walklab::ReductionCheck check =
            walklab::run_reduction_check(rd_from, rd_to, rd_n, rng);
        agreements += check.agree ? 1 : 0;
        std::printf("%" PRId64 ",%" PRId64 ",%d,%d,%d\n", trial, rd_n,
                    check.source_answer ? 1 : 0, check.mapped_answer ? 1 : 0,
                    check.agree ? 1 : 0);
      }
      std::printf("# agreement=%" PRId64 "/%" PRId64 "\n", agreements, rd_trials);
      return agreements == rd_trials ? 0 : 1;
    }

    if (wk->parsed()) {
      print_manifest_comment(make_manifest(
          "walk", {{"n", std::to_string(wk_n)},
                   {"r", std::to_string(wk_r)},
                   {"t1", std::to_string(wk_t1)},
                   {"t2", std::to_string(wk_t2)},
                   {"policy", wk_policy},
                   {"instance", wk_instance},
                   {"sweep", wk_sweep ? "true" : "false"},
                   {"t1_max", std::to_string(wk_t1_max)},
                   {"t2_max", std::to_string(wk_t2_max)},
                   {"seed", std::to_string(wk_seed)}}));
      std::vector<std::int64_t> values;
      if (!wk_instance.empty()) {
        const walklab::InstanceFile file = walklab::read_instance_file(wk_instance);
        values = file.values;
        wk_n = static_cast<int>(values.size());
      } else {
        walklab::Rng rng(wk_seed);
        values.resize(wk_n);
        for (auto& v : values) v = rng.next_in(-2 * wk_n, 2 * wk_n);
        if (wk_n >= 3) values[2] = -(values[0] + values[1]);  // planted triple
      }
      walklab::WalkConfig cfg;
      cfg.n = wk_n;
      cfg.r = wk_r;
      cfg.policy = wk_policy == "pathdep" ? walklab::RepPolicy::path_dependent
                                          : walklab::RepPolicy::canonical;
      walklab::WalkSimulator sim(cfg, values);
      std::printf("t1,t2,success_prob\n");
      if (wk_sweep) {
        const std::int64_t t1_max =
            wk_t1_max > 0 ? wk_t1_max
                          : static_cast<std::int64_t>(
                                std::ceil(3.0 * std::sqrt(static_cast<double>(wk_r))));
        const std::int64_t t2_max =
            wk_t2_max > 0
                ? wk_t2_max
                : static_cast<std::int64_t>(std::ceil(
                      3.0 * std::pow(static_cast<double>(wk_n) / wk_r, 1.5)));
        for (const auto& point : sim.sweep(t1_max, t2_max)) {
          std::printf("%" PRId64 ",%" PRId64 ",%.9f\n", point.t1, point.t2, point.success);
        }
      } else {
        std::int64_t t1 = wk_t1;
        std::int64_t t2 = wk_t2;
        if (t1 <= 0 || t2 <= 0) {
          const auto [d1, d2] = walklab::WalkSimulator::default_schedule(wk_n, wk_r);
          if (t1 <= 0) t1 = d1;
          if (t2 <= 0) t2 = d2;
        }
        sim.run_schedule(t1, t2);
        std::printf("%" PRId64 ",%" PRId64 ",%.9f\n", t1, t2, sim.success_probability());
      }
      return 0;
    }

    if (ct->parsed()) {
      nlohmann::ordered_json out;
      out["manifest"] = make_manifest(
          "cost", {{"kind", cost_kind},
                   {"alpha", cost_alpha},
                   {"beta", cost_beta},
                   {"delta", cost_delta},
                   {"k", cost_k},
                   {"with_verification", cost_verification ? "true" : "false"}});
      out["kind"] = cost_kind;
      if (cost_kind == "walk") {
        const Rational alpha = parse_rational(cost_alpha, "alpha");
        const Rational beta = parse_rational(cost_beta, "beta");
        const Rational e = walklab::walk_time_exponent(alpha, beta);
        const walklab::OpenInterval iv = walklab::feasible_beta_range(alpha);
        out["exponent"] = e.to_string();
        out["exponent_decimal"] = e.to_double();
        out["interval"] = interval_json(iv);
        out["feasible"] = iv.contains(beta);
      } else if (cost_kind == "conv") {
        const Rational alpha = parse_rational(cost_alpha, "alpha");
        const Rational delta = parse_rational(cost_delta, "delta");
        const Rational e =
            walklab::convolution_pipeline_exponent(alpha, delta, cost_verification);
        const walklab::OpenInterval iv = walklab::feasible_alpha_range(delta);
        out["exponent"] = e.to_string();
        out["exponent_decimal"] = e.to_double();
        out["interval"] = interval_json(iv);
        out["feasible"] = iv.contains(alpha);
      } else if (cost_kind == "ewt") {
        const walklab::EwtBound bound = walklab::ewt_lower_bound();
        out["exponent"] = bound.exponent.to_string();
        out["exponent_decimal"] = bound.exponent.to_double();
        out["witness"] = bound.witness;
        out["feasible"] = true;
      } else {  // window
        const Rational delta = parse_rational(cost_delta, "delta");
        const Rational k = parse_rational(cost_k, "k");
        try {
          const walklab::CombinedWindow win =
              cost_alpha.empty()
                  ? walklab::combined_window(delta, k)
                  : walklab::combined_window_with_alpha(delta,
                                                        parse_rational(cost_alpha, "alpha"), k);
          out["alpha"] = win.alpha.to_string();
          out["delta_eff"] = win.delta_eff.to_string();
          out["interval"] = interval_json(win.beta);
          out["feasible"] = !win.beta.empty();
        } catch (const walklab::Error& e) {
          if (e.code() != walklab::ErrorCode::infeasible_k) throw;
          out["feasible"] = false;
          out["error"] = walklab::error_code_name(e.code());
        }
      }
      std::printf("%s\n", out.dump(2).c_str());
      return 0;
    }
  } catch (const walklab::Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", walklab::error_code_name(e.code()), e.what());
    return 1;
  }
  return 0;
}
