#include "flatkit_cli/io.hpp"
#include "flatkit_cli/report.hpp"

#include "flatkit/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace flatkit;

std::uint64_t default_node_limit() {
  if (const char* env = std::getenv("FLATKIT_NODE_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring bad FLATKIT_NODE_LIMIT\n";
    }
  }
  return kDefaultNodeLimit;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
}

struct CommonOpts {
  int jobs = 1;
  std::uint64_t node_limit = default_node_limit();
  std::string format = "json";
  std::string out;

  void attach(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--jobs", jobs, "Worker threads for flat enumeration")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--node-limit", node_limit,
                    "Degeneracy search node budget (default from FLATKIT_NODE_LIMIT)");
    if (with_format)
      cmd->add_option("--format", format, "Output format: json or csv")
          ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("-o,--output", out, "Output file (default: stdout)");
  }

  report::Options options() const {
    report::Options opt;
    opt.jobs = jobs;
    opt.limits.node_limit = node_limit;
    opt.format = format;
    return opt;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"exact-arithmetic matroid toolkit: generators, flats, degeneracy, "
               "incidence-inequality checks"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  // ---- gen -----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  std::string gen_out;

  int dw_rank = 3, dw_order = 2;
  bool dw_nojoints = false;
  auto* gen_dowling = gen->add_subcommand("dowling", "Dowling geometry DG(r, Z_t)");
  gen_dowling->add_option("--rank", dw_rank, "Number of joints r")->required();
  gen_dowling->add_option("--group-order", dw_order, "Cyclic group order t")->required();
  gen_dowling->add_flag("--delete-joints", dw_nojoints, "Omit the joint elements");
  gen_dowling->add_option("-o,--output", gen_out, "Output file")->required();

  int un_rank = 3, un_size = 5;
  auto* gen_uniform = gen->add_subcommand("uniform", "Uniform matroid (Vandermonde)");
  gen_uniform->add_option("--rank", un_rank)->required();
  gen_uniform->add_option("--size", un_size)->required();
  gen_uniform->add_option("-o,--output", gen_out)->required();

  int fig_a = 3;
  auto* gen_fig = gen->add_subcommand("figure1", "Three lines two-summed onto M(K4)");
  gen_fig->add_option("--a", fig_a, "Pendant lines keep a+1 points")->required();
  gen_fig->add_option("-o,--output", gen_out)->required();

  auto* gen_k4 = gen->add_subcommand("k4", "The graphic matroid M(K4)");
  gen_k4->add_option("-o,--output", gen_out)->required();

  int rc_rank = 3, rc_size = 8;
  std::uint64_t rc_seed = 1;
  auto* gen_random = gen->add_subcommand("random", "Random simple rational configuration");
  gen_random->add_option("--rank", rc_rank)->required();
  gen_random->add_option("--size", rc_size)->required();
  gen_random->add_option("--seed", rc_seed)->required();
  gen_random->add_option("-o,--output", gen_out)->required();

  int ds_a = 3, ds_b = 0;
  auto* gen_dsum = gen->add_subcommand("direct-sum", "Direct sum of two lines");
  gen_dsum->add_option("--a", ds_a, "Points on the first line")->required();
  gen_dsum->add_option("--b", ds_b, "Points on the second line (default: a)");
  gen_dsum->add_option("-o,--output", gen_out)->required();

  int ts_a = 4, ts_b = 0;
  auto* gen_tsum = gen->add_subcommand("two-sum", "Two-sum of two lines");
  gen_tsum->add_option("--a", ts_a, "Points on the first line")->required();
  gen_tsum->add_option("--b", ts_b, "Points on the second line (default: a)");
  gen_tsum->add_option("-o,--output", gen_out)->required();

  // ---- flats ---------------------------------------------------------
  auto* flats_cmd = app.add_subcommand("flats", "Enumerate flats or flat statistics");
  std::string flats_path;
  std::optional<int> flats_rank;
  bool flats_list = false, flats_stats = false, flats_trivial = false;
  int flats_rank_value = -1;
  CommonOpts flats_opts;
  flats_cmd->add_option("instance", flats_path, "Instance file")->required();
  flats_cmd->add_option("--rank", flats_rank_value, "Restrict to rank-k flats");
  flats_cmd->add_flag("--list", flats_list, "List flats instead of statistics");
  flats_cmd->add_flag("--stats", flats_stats, "Emit statistics (default)");
  flats_cmd->add_flag("--include-trivial", flats_trivial,
                      "Include rank 0 and rank r(M) in the overall average");
  flats_opts.attach(flats_cmd);

  // ---- degeneracy ----------------------------------------------------
  auto* deg_cmd = app.add_subcommand("degeneracy", "Largest k-degenerate set search");
  std::string deg_path;
  int deg_k = 2;
  bool deg_stratify = false;
  CommonOpts deg_opts;
  deg_cmd->add_option("instance", deg_path)->required();
  deg_cmd->add_option("--k", deg_k, "Degeneracy order (>= 2)")->required();
  deg_cmd->add_flag("--stratify", deg_stratify,
                    "Also compute X_2..X_k and the essential dimension");
  deg_opts.attach(deg_cmd);

  // ---- verify --------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run inequality checks");
  std::string verify_path, verify_checks;
  bool verify_all = false;
  CommonOpts verify_opts;
  verify_cmd->add_option("instance", verify_path)->required();
  verify_cmd->add_option(
      "--check", verify_checks,
      "Comma-separated check names: melchior, hirzebruch, dbe, top-heavy, "
      "line-bound, average-line, strat1, strat2, lund-ratio, plane-probe, "
      "average-flat-size, hyperplane-probe");
  verify_cmd->add_flag("--all", verify_all, "Run every applicable check (default)");
  verify_opts.attach(verify_cmd);

  // ---- report --------------------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "Consolidated report over a corpus");
  std::string report_dir;
  CommonOpts report_opts;
  report_cmd->add_option("corpus", report_dir, "Directory of instance files")->required();
  report_opts.attach(report_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? report::kExitOk : report::kExitUsage;
  }

  try {
    if (gen->parsed()) {
      std::string text;
      if (gen_dowling->parsed()) text = io::gen_dowling_file(dw_rank, dw_order, dw_nojoints);
      if (gen_uniform->parsed()) text = io::gen_uniform_file(un_rank, un_size);
      if (gen_fig->parsed()) text = io::gen_figure1_script(fig_a);
      if (gen_k4->parsed()) text = io::gen_k4_file();
      if (gen_random->parsed()) text = io::gen_random_file(rc_rank, rc_size, rc_seed);
      if (gen_dsum->parsed()) text = io::gen_direct_sum_script(ds_a, ds_b > 0 ? ds_b : ds_a);
      if (gen_tsum->parsed()) text = io::gen_two_sum_script(ts_a, ts_b > 0 ? ts_b : ts_a);
      io::write_file(gen_out, text);
      return report::kExitOk;
    }
    if (flats_cmd->parsed()) {
      if (flats_cmd->count("--rank")) flats_rank = flats_rank_value;
      auto inst = io::load_instance(flats_path);
      auto opt = flats_opts.options();
      opt.include_trivial = flats_trivial;
      auto doc = report::flats_document(inst, flats_rank, flats_list && !flats_stats, opt);
      emit(report::render(doc, flats_opts.format), flats_opts.out);
      return report::kExitOk;
    }
    if (deg_cmd->parsed()) {
      auto inst = io::load_instance(deg_path);
      auto doc = report::degeneracy_document(inst, deg_k, deg_stratify, deg_opts.options());
      emit(report::render(doc, deg_opts.format), deg_opts.out);
      return report::kExitOk;
    }
    if (verify_cmd->parsed()) {
      auto inst = io::load_instance(verify_path);
      std::vector<std::string> names;
      if (!verify_checks.empty() && !verify_all) {
        std::istringstream in(verify_checks);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          bool known = false;
          for (const auto& c : report::kCheckNames) known = known || c == tok;
          if (!known) {
            std::cerr << "error: unknown check '" << tok << "'\n";
            return report::kExitUsage;
          }
          names.push_back(tok);
        }
      }
      int exit_code = report::kExitOk;
      auto doc = report::verify_document(inst, names, verify_opts.options(), exit_code);
      emit(report::render(doc, verify_opts.format), verify_opts.out);
      return exit_code;
    }
    if (report_cmd->parsed()) {
      int exit_code = report::kExitOk;
      auto doc = report::corpus_document(report_dir, report_opts.options(), exit_code);
      emit(report::render(doc, report_opts.format), report_opts.out);
      return exit_code;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return report::kExitUsage;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return report::kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return report::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return report::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return report::kExitUsage;
  }
  return report::kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
