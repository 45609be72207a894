#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/joinspace.hpp"
#include "sasaki/report.hpp"

using sasaki::cli::CliRequest;
using sasaki::cli::Format;
using sasaki::cli::Subcommand;

namespace {

// -l1, -l2 and -l2p are multi-letter short flags; CLI11 wants them long.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    for (const char* name : {"-l1", "-l2p", "-l2"}) {
      const std::string n(name);
      if (a == n || a.rfind(n + "=", 0) == 0) {
        a = "-" + a;
        break;
      }
    }
    out.push_back(std::move(a));
  }
  std::reverse(out.begin(), out.end());  // CLI11 parses a reversed vector
  return out;
}

struct Common {
  bool json = false, table = false, csv = false;
  unsigned precision = sasaki::poly::kDefaultDigits;
  std::int64_t bound = 100;
  unsigned jobs = 1;
  bool quote_caveat = false;
};

void add_common(CLI::App* sub, Common& c) {
  auto* j = sub->add_flag("--json", c.json, "JSON output (default)");
  auto* t = sub->add_flag("--table", c.table, "human-readable output");
  auto* v = sub->add_flag("--csv", c.csv, "CSV rows (sweep only)");
  j->excludes(t)->excludes(v);
  t->excludes(v);
  sub->add_option("--precision", c.precision, "decimal digits for approximations and isolating intervals")
      ->check(CLI::Range(1u, 1000u));
  sub->add_option("--bound", c.bound, "upper end of the default l2 range for sweeps");
  sub->add_option("--jobs", c.jobs, "worker threads for sweeps (SASAKI_JOBS overrides)");
  sub->add_flag("--quote-caveat", c.quote_caveat, "attach the CSC caveat to the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, classification and CSC rays of join manifolds"};
  app.require_subcommand(1);

  CliRequest req;
  Common common;
  std::int64_t p = 0, l1 = 0, l2 = 0, l2p = 0;
  std::string weights, range, relation, target;
  std::vector<std::string> tuples;

  auto add_params = [&](CLI::App* sub, bool with_l2) {
    sub->add_option("-p", p, "sphere dimension parameter, S^{2p+1}");
    sub->add_option("--l1", l1, "l1");
    if (with_l2) sub->add_option("--l2", l2, "l2");
    sub->add_option("-w", weights, "weights W1,W2");
  };

  CLI::App* inv = app.add_subcommand("invariants", "topological invariants");
  add_params(inv, true);
  add_common(inv, common);

  CLI::App* csc = app.add_subcommand("csc", "CSC rays of the w-cone");
  add_params(csc, true);
  add_common(csc, common);

  CLI::App* cls = app.add_subcommand("classify", "homotopy, homeomorphism or diffeomorphism in dimension 7");
  cls->add_option("relation", relation, "homotopy | homeo | diffeo")
      ->required()
      ->check(CLI::IsMember({"homotopy", "homeo", "diffeo"}));
  cls->add_option("tuples", tuples, "two tuples (l1,l2,w1,w2) at p = 2, for homotopy");
  cls->add_option("--l1", l1, "l1");
  cls->add_option("--l2", l2, "l2");
  cls->add_option("--l2p", l2p, "l2 of the second manifold");
  add_common(cls, common);

  CLI::App* swp = app.add_subcommand("sweep", "sweep l2 for CSC thresholds or diffeomorphism classes");
  swp->add_option("target", target, "csc | diffeo")->required()->check(CLI::IsMember({"csc", "diffeo"}));
  add_params(swp, false);
  swp->add_option("--l2", range, "range LO..HI, optionally :odd or :even");
  add_common(swp, common);

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    auto set = [](std::optional<std::int64_t>& dst, CLI::App* sub, const char* name, std::int64_t v) {
      if (sub->count(name)) dst = v;
    };
    CLI::App* sub = app.get_subcommands().front();
    if (sub == inv) req.subcommand = Subcommand::kInvariants;
    if (sub == csc) req.subcommand = Subcommand::kCsc;
    if (sub == cls) req.subcommand = Subcommand::kClassify, req.mode = relation;
    if (sub == swp) req.subcommand = Subcommand::kSweep, req.mode = target;

    if (sub != cls) set(req.p, sub, "-p", p);
    set(req.l1, sub, "--l1", l1);
    if (sub != swp) set(req.l2, sub, "--l2", l2);
    if (sub == cls) set(req.l2p, sub, "--l2p", l2p);
    if (sub != cls && sub->count("-w")) {
      auto [w1, w2] = sasaki::cli::parse_weights(weights);
      req.w1 = w1;
      req.w2 = w2;
    }
    for (const auto& t : tuples) req.tuples.push_back(sasaki::cli::parse_tuple(t));
    if (sub == swp && sub->count("--l2")) req.range = sasaki::cli::parse_range(range);

    req.format = common.table ? Format::kTable : common.csv ? Format::kCsv : Format::kJson;
    req.precision = common.precision;
    req.bound = common.bound;
    req.jobs = common.jobs;
    if (const char* env = std::getenv("SASAKI_JOBS")) {
      try {
        req.jobs = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        throw sasaki::InvalidInput(std::string("SASAKI_JOBS must be a positive integer, got '") +
                                   env + "'");
      }
    }
    req.quote_caveat = common.quote_caveat || req.format == Format::kTable;

    const auto report = sasaki::cli::run(req);
    std::cout << sasaki::cli::render(report, req);
    return 0;
  } catch (const sasaki::ValidationError& e) {
    std::cerr << "error [" << sasaki::to_string(e.constraint()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sasaki::cli::exit_code_for(e);
  }
}
