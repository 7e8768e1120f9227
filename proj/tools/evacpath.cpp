// evacpath: generate, solve, test, verify and benchmark k-sink instances.
//
// Exit codes: 0 success, 1 verification or internal failure, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evac/generator.hpp"
#include "evac/op_counters.hpp"
#include "evac/plan_io.hpp"
#include "evac/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Raised for anything the user can fix: unreadable files, bad instances, bad plans.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

evac::PathNetwork load_instance(const std::string& path) {
  try {
    return evac::parse_instance(read_file(path));
  } catch (const evac::InstanceError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const std::map<std::string, evac::BackendChoice> kBackends{
    {"auto", evac::BackendChoice::automatic},
    {"general", evac::BackendChoice::general},
    {"uniform", evac::BackendChoice::uniform}};

const std::map<std::string, evac::Optimizer> kOptimizers{
    {"matrix", evac::Optimizer::sorted_matrix}, {"bisect", evac::Optimizer::bisect}};

// CLI::PositiveNumber reports a floating-point range, which reads oddly for counts.
const CLI::Validator kPositiveInt(
    [](std::string& v) {
      const bool digits = !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
      const bool nonzero = v.find_first_not_of('0') != std::string::npos;
      return digits && nonzero ? std::string() : "must be a positive integer, got " + v;
    },
    "POSITIVE");

evac::SinkEngine make_engine(evac::PathNetwork net, evac::BackendChoice backend) {
  try {
    return evac::SinkEngine(std::move(net), backend);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());  // e.g. uniform backend on mixed capacities
  }
}

struct GenArgs {
  evac::GenOptions opt;
  std::string out;
};

struct SolveArgs {
  std::string input;
  std::size_t k = 1;
  evac::BackendChoice backend = evac::BackendChoice::automatic;
  evac::Optimizer optimizer = evac::Optimizer::sorted_matrix;
  std::string out;
};

struct FeasibleArgs {
  std::string input;
  std::size_t k = 1;
  double t = 0.0;
  evac::BackendChoice backend = evac::BackendChoice::automatic;
};

struct VerifyArgs {
  std::string input;
  std::string plan;
};

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  evac::BackendChoice backend = evac::BackendChoice::automatic;
  bool uniform = false;
  std::string csv;
};

int cmd_gen(const GenArgs& a) {
  try {
    write_output(a.out, evac::format_instance(evac::generate_instance(a.opt)));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int cmd_solve(const SolveArgs& a) {
  const evac::SinkEngine engine = make_engine(load_instance(a.input), a.backend);
  const evac::SolvePlan plan = evac::solve_ksink(engine, a.k, {a.backend, a.optimizer, false});
  const std::string text = evac::format_plan(evac::to_document(plan));
  write_output(a.out, text);
  // Keep stdout clean for the plan when it goes there.
  (a.out.empty() || a.out == "-" ? std::cerr : std::cout)
      << "t* = " << fmt12(plan.time) << " (" << evac::to_string(engine.backend()) << " backend)\n";
  return kOk;
}

int cmd_feasible(const FeasibleArgs& a) {
  const evac::SinkEngine engine = make_engine(load_instance(a.input), a.backend);
  const evac::Feasibility f = evac::feasible(engine, a.t, a.k);
  if (!f.feasible) {
    std::cout << "no\n";
    return kOk;
  }
  std::cout << "yes\n";
  for (const evac::Segment& s : f.plan->segments) {
    std::cout << "[" << s.first + 1 << ", " << s.last + 1 << "] sink ";
    if (s.sink.is_vertex()) {
      std::cout << "vertex " << s.sink.index() + 1 << "\n";
    } else {
      std::cout << "edge " << s.sink.index() + 1 << " offset " << fmt12(s.sink.offset()) << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a) {
  const evac::PrefixIndex idx(load_instance(a.input));
  evac::PlanDocument doc;
  try {
    doc = evac::parse_plan(read_file(a.plan));
  } catch (const evac::PlanError& e) {
    throw InputError(a.plan + ": " + e.what());
  }
  const evac::VerifyReport r = evac::verify_plan(idx, doc);
  if (!r.ok) {
    std::cout << "FAIL: " << r.message << "\n";
    return kFailure;
  }
  std::cout << "ok: max segment time " << fmt12(r.max_time) << " <= " << fmt12(doc.time) << "\n";
  return kOk;
}

int cmd_bench(const BenchArgs& a) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

  std::ostringstream csv;
  csv << "n,k,seed,backend,build_ms,feas_ops,solve_ms,tstar\n";
  for (std::size_t n : a.sizes) {
    evac::GenOptions opt;
    opt.n = n;
    opt.seed = a.seed;
    opt.uniform = a.uniform || a.backend == evac::BackendChoice::uniform;
    const evac::PathNetwork net = evac::generate_instance(opt);

    const auto t0 = clock::now();
    const evac::SinkEngine engine = make_engine(net, a.backend);
    const auto t1 = clock::now();
    const std::size_t k = std::min(a.k, n);
    const evac::SolvePlan plan = evac::solve_ksink(engine, k);
    const auto t2 = clock::now();

    // Work of a single feasibility test at the optimum.
    evac::op_counters().reset();
    evac::feasible(engine, plan.time, k);
    const std::uint64_t feas_ops = evac::op_counters().candidate_evals;

    csv << n << ',' << a.k << ',' << a.seed << ',' << evac::to_string(engine.backend()) << ','
        << fmt12(ms(t1 - t0)) << ',' << feas_ops << ',' << fmt12(ms(t2 - t1)) << ','
        << fmt12(plan.time) << '\n';
  }
  write_output(a.csv, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-sink location on dynamic path networks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a seeded random instance");
  g->add_option("-n,--n", gen.opt.n, "Number of vertices")->required()->check(kPositiveInt);
  g->add_option("--seed", gen.opt.seed, "64-bit seed for std::mt19937_64");
  g->add_option("--w-min", gen.opt.weight.lo, "Smallest vertex weight")->capture_default_str();
  g->add_option("--w-max", gen.opt.weight.hi, "Largest vertex weight")->capture_default_str();
  g->add_option("--len-min", gen.opt.length.lo, "Smallest edge length")->capture_default_str();
  g->add_option("--len-max", gen.opt.length.hi, "Largest edge length")->capture_default_str();
  g->add_option("--cap-min", gen.opt.capacity.lo, "Smallest edge capacity")->capture_default_str();
  g->add_option("--cap-max", gen.opt.capacity.hi, "Largest edge capacity")->capture_default_str();
  g->add_option("--tau", gen.opt.tau, "Transit time per unit length")->capture_default_str();
  g->add_flag("--uniform", gen.opt.uniform, "Use one capacity on every edge");
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Compute an optimal k-sink plan");
  s->add_option("input", solve.input, "Instance file")->required();
  s->add_option("-k,--k", solve.k, "Number of sinks")->required()->check(kPositiveInt);
  s->add_option("--backend", solve.backend, "auto, general or uniform")
      ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case));
  s->add_option("--optimizer", solve.optimizer, "matrix or bisect")
      ->transform(CLI::CheckedTransformer(kOptimizers, CLI::ignore_case));
  s->add_option("-o,--out", solve.out, "Plan file (default stdout)");

  FeasibleArgs feas;
  auto* f = app.add_subcommand("feasible", "Test (t, k)-feasibility");
  f->add_option("input", feas.input, "Instance file")->required();
  f->add_option("-k,--k", feas.k, "Number of sinks")->required()->check(kPositiveInt);
  f->add_option("-t,--t", feas.t, "Time bound")->required()->check(CLI::NonNegativeNumber);
  f->add_option("--backend", feas.backend, "auto, general or uniform")
      ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a plan against an instance");
  v->add_option("input", ver.input, "Instance file")->required();
  v->add_option("plan", ver.plan, "Plan file")->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time generated instances and count operations");
  b->add_option("--n-list", bench.sizes, "Comma-separated vertex counts")
      ->required()
      ->delimiter(',')
      ->check(kPositiveInt);
  b->add_option("-k,--k", bench.k, "Number of sinks")->required()->check(kPositiveInt);
  b->add_option("--seed", bench.seed, "Instance seed");
  b->add_option("--backend", bench.backend, "auto, general or uniform")
      ->transform(CLI::CheckedTransformer(kBackends, CLI::ignore_case));
  b->add_flag("--uniform", bench.uniform, "Generate uniform-capacity instances");
  b->add_option("--csv", bench.csv, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_solve(solve);
    if (*f) return cmd_feasible(feas);
    if (*v) return cmd_verify(ver);
    if (*b) return cmd_bench(bench);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
