// Command-line front end: parameters, tables, encoding, erasure decoding,
// distance verification, rate curves and channel simulation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdrs/analysis.hpp"
#include "mdrs/code_params.hpp"
#include "mdrs/distance.hpp"
#include "mdrs/encoder.hpp"
#include "mdrs/erasure.hpp"
#include "mdrs/io.hpp"

namespace {

struct FieldFlags {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint32_t n = 1;
  std::uint32_t d = 1;
};

void add_field_flags(CLI::App* cmd, FieldFlags& flags) {
  cmd->add_option("--p", flags.p, "prime characteristic")->required();
  cmd->add_option("--m", flags.m, "extension degree")->default_val(1);
  cmd->add_option("--n", flags.n, "number of variables")->required();
  cmd->add_option("--d", flags.d, "design minimum distance")->required();
}

mdrs::CodeSpec make_spec(const FieldFlags& flags) {
  return mdrs::CodeSpec{mdrs::Field(flags.p, flags.m), flags.n, flags.d};
}

bool ci_mode() {
  const char* v = std::getenv("MDRS_CI");
  return v != nullptr && std::string(v) == "1";
}

void require_seed_in_ci(bool seed_given) {
  if (ci_mode() && !seed_given)
    throw mdrs::Error("MDRS_CI=1 requires an explicit --seed");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw mdrs::Error("cannot open output file " + path);
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mdrs::Error("cannot open input file " + path);
  return in;
}

void cmd_params(const FieldFlags& flags) {
  const auto region = mdrs::build_region(make_spec(flags));
  std::cout << mdrs::params_to_json(region).dump(2) << '\n';
}

void cmd_tables(const std::string& which) {
  if (which == "info") {
    const mdrs::Field field(5, 1);
    for (std::uint32_t d = 3; d <= 10; ++d) {
      const auto region = mdrs::build_region(mdrs::CodeSpec{field, 2, d});
      std::cout << "d=" << d << " K_m=";
      for (std::size_t g = 0; g < region.groups.size(); ++g) {
        if (g) std::cout << ',';
        std::cout << region.groups[g].count - 1;
      }
      std::cout << " K=" << region.dim() << '\n';
    }
    return;
  }
  std::cout << "d n=2 n=3 n=4 n=5\n";
  for (std::uint32_t d = 2; d <= 16; ++d) {
    std::cout << d;
    for (std::uint32_t n = 2; n <= 5; ++n)
      std::cout << ' ' << mdrs::check_count_small_d(d, n);
    std::cout << '\n';
  }
}

void cmd_encode(const FieldFlags& flags, const std::string& msg_path,
                const std::string& out_path) {
  const auto spec = make_spec(flags);
  const auto region = mdrs::build_region(spec);
  auto in = open_input(msg_path);
  const auto message =
      mdrs::read_symbols(in, spec.field, region.dim(), "message file");
  const auto word = mdrs::encode(region, message);
  if (out_path.empty()) {
    mdrs::write_symbols(std::cout, word);
  } else {
    auto out = open_output(out_path);
    mdrs::write_symbols(out, word);
  }
}

void cmd_decode(const FieldFlags& flags, const std::string& rx_path,
                const std::string& out_path) {
  const auto spec = make_spec(flags);
  const auto region = mdrs::build_region(spec);
  auto in = open_input(rx_path);
  const auto rx = mdrs::read_received(in, spec.field, spec.length());
  const auto gen = mdrs::generator_matrix(region);
  const auto message = mdrs::decode_erasures(spec, rx, gen);
  if (out_path.empty()) {
    mdrs::write_symbols(std::cout, message);
  } else {
    auto out = open_output(out_path);
    mdrs::write_symbols(out, message);
  }
}

void cmd_verify(const FieldFlags& flags, std::uint64_t budget,
                std::uint64_t trials, std::uint64_t seed, bool seed_given,
                unsigned threads) {
  const auto spec = make_spec(flags);
  mdrs::DistanceReport report;
  if (trials > 0) {
    require_seed_in_ci(seed_given);
    report = mdrs::min_weight_sampled(spec, trials, seed);
  } else {
    report = mdrs::min_weight_exhaustive(spec, budget, threads);
  }
  std::cout << mdrs::report_to_json(report).dump(2) << '\n';
}

void cmd_curves(const std::string& kind_name, std::uint32_t q,
                const std::vector<std::uint32_t>& dims,
                const std::vector<std::uint32_t>& lengths,
                const std::string& out_path) {
  mdrs::CurveKind kind;
  if (kind_name == "dim2")
    kind = mdrs::CurveKind::Dim2;
  else if (kind_name == "dim-sweep")
    kind = mdrs::CurveKind::DimSweep;
  else if (kind_name == "product-compare")
    kind = mdrs::CurveKind::ProductCompare;
  else
    kind = mdrs::CurveKind::GvCompare;

  const auto points = mdrs::emit_curves(kind, q, dims, lengths);
  auto out = open_output(out_path);
  mdrs::write_curves_csv(out, points);
  std::cout << "wrote " << points.size() << " points to " << out_path << '\n';
  if (kind == mdrs::CurveKind::GvCompare) {
    std::cout << "GV variant: largest k with sum_{i=0}^{d-2} C(N-1,i)(q-1)^i"
                 " < q^(N-k)\n";
    for (const auto& row : mdrs::gv_compare_table(q, lengths)) {
      std::cout << "N=" << row.length << " d=" << row.d
                << " K'=" << row.shortened_k << " kGV=" << row.gv_k
                << " delta="
                << static_cast<std::int64_t>(row.shortened_k) -
                       static_cast<std::int64_t>(row.gv_k)
                << '\n';
    }
  }
}

void cmd_simulate(const FieldFlags& flags, double epsilon,
                  std::uint64_t trials, std::uint64_t seed, bool seed_given,
                  unsigned threads) {
  require_seed_in_ci(seed_given);
  const auto spec = make_spec(flags);
  const auto stats =
      mdrs::simulate_erasure_channel(spec, epsilon, trials, seed, threads);
  std::cout << mdrs::stats_to_json(stats, spec).dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-dimensional nonsystematic Reed-Solomon codes"};
  app.require_subcommand(1);

  FieldFlags params_flags;
  auto* params = app.add_subcommand("params", "degree region and K/N-K");
  add_field_flags(params, params_flags);

  std::string which = "info";
  auto* tables = app.add_subcommand("tables", "information/check tables");
  tables->add_option("--which", which, "info or checks")
      ->check(CLI::IsMember({"info", "checks"}))
      ->required();

  FieldFlags encode_flags;
  std::string msg_path, encode_out;
  auto* encode = app.add_subcommand("encode", "message file -> codeword file");
  add_field_flags(encode, encode_flags);
  encode->add_option("--msg", msg_path, "message file (K symbols)")
      ->required();
  encode->add_option("--out", encode_out, "output path (default stdout)");

  FieldFlags decode_flags;
  std::string rx_path, decode_out;
  auto* decode = app.add_subcommand("decode", "received file -> message file");
  add_field_flags(decode, decode_flags);
  decode->add_option("--rx", rx_path, "received file (N symbols, ? = erasure)")
      ->required();
  decode->add_option("--out", decode_out, "output path (default stdout)");

  FieldFlags verify_flags;
  std::uint64_t budget = mdrs::kDefaultEnumerationBudget;
  std::uint64_t verify_trials = 0;
  std::uint64_t verify_seed = 0;
  unsigned verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "minimum-weight verification");
  add_field_flags(verify, verify_flags);
  verify->add_option("--budget", budget, "max q^K codewords to enumerate");
  auto* verify_trials_opt = verify->add_option(
      "--trials", verify_trials, "sample this many random messages instead");
  auto* verify_seed_opt =
      verify->add_option("--seed", verify_seed, "prng seed for sampling");
  verify->add_option("--threads", verify_threads, "worker threads");
  verify_seed_opt->needs(verify_trials_opt);

  std::string kind_name;
  std::uint32_t curve_q = 0;
  std::vector<std::uint32_t> dims;
  std::vector<std::uint32_t> lengths;
  std::string curves_out;
  auto* curves = app.add_subcommand("curves", "rate curve CSV emission");
  curves->add_option("--kind", kind_name, "curve family")
      ->check(CLI::IsMember({"dim2", "dim-sweep", "product-compare",
                             "gv-compare"}))
      ->required();
  curves->add_option("--q", curve_q, "field order")->required();
  curves->add_option("--dims", dims, "dimensions for dim-sweep")
      ->delimiter(',');
  curves->add_option("--lengths", lengths, "shortened lengths for gv-compare")
      ->delimiter(',');
  curves->add_option("--out", curves_out, "CSV output path")->required();

  FieldFlags sim_flags;
  double epsilon = 0.0;
  std::uint64_t sim_trials = 0;
  std::uint64_t sim_seed = 0;
  unsigned sim_threads = 1;
  auto* simulate = app.add_subcommand("simulate", "erasure channel Monte Carlo");
  add_field_flags(simulate, sim_flags);
  simulate->add_option("--epsilon", epsilon, "per-coordinate erasure probability")
      ->required();
  simulate->add_option("--trials", sim_trials, "number of trials")->required();
  auto* sim_seed_opt =
      simulate->add_option("--seed", sim_seed, "prng seed (default 0)");
  simulate->add_option("--threads", sim_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (params->parsed()) {
      cmd_params(params_flags);
    } else if (tables->parsed()) {
      cmd_tables(which);
    } else if (encode->parsed()) {
      cmd_encode(encode_flags, msg_path, encode_out);
    } else if (decode->parsed()) {
      cmd_decode(decode_flags, rx_path, decode_out);
    } else if (verify->parsed()) {
      cmd_verify(verify_flags, budget, verify_trials, verify_seed,
                 verify_seed_opt->count() > 0, verify_threads);
    } else if (curves->parsed()) {
      cmd_curves(kind_name, curve_q, dims, lengths, curves_out);
    } else if (simulate->parsed()) {
      cmd_simulate(sim_flags, epsilon, sim_trials, sim_seed,
                   sim_seed_opt->count() > 0, sim_threads);
    }
  } catch (const mdrs::EmptyRegion& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mdrs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mdrs::LengthMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mdrs::RankDeficient& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const mdrs::Inconsistent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const mdrs::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
