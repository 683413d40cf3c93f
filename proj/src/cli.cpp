#include "sqdiff/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "sqdiff/errors.hpp"
#include "sqdiff/euler_section.hpp"
#include "sqdiff/fiber.hpp"
#include "sqdiff/json_io.hpp"
#include "sqdiff/search.hpp"
#include "sqdiff/simd/pair_filter.hpp"
#include "sqdiff/transforms.hpp"
#include "sqdiff/triples.hpp"

namespace sqdiff::cli {

namespace {

using json::Json;

std::vector<std::string> split_commas(const std::string& text, std::size_t expected, const char* what) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != expected)
    throw Error(ErrorKind::Parse, what,
                std::string(what) + " expects " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  return parts;
}

std::array<Integer, 3> parse_int3(const std::string& text, const char* what) {
  const auto p = split_commas(text, 3, what);
  return {Integer::parse(p[0]), Integer::parse(p[1]), Integer::parse(p[2])};
}

std::array<Rational, 3> parse_rat3(const std::string& text, const char* what) {
  const auto p = split_commas(text, 3, what);
  return {Rational::parse(p[0]), Rational::parse(p[1]), Rational::parse(p[2])};
}

QuarticPoint parse_point(const std::string& text, const QuarticCurve& C) {
  if (text == "O") return QuarticCurve::origin();
  if (text == "P") return QuarticCurve::point_p();
  if (text == "T") return QuarticCurve::point_t();
  if (text == "Q") return euler_point(C);
  if (text == "inf+") return QuarticPoint::infinity(InfinityBranch::Plus);
  if (text == "inf-") return QuarticPoint::infinity(InfinityBranch::Minus);
  const auto p = split_commas(text, 2, "--point");
  return QuarticPoint::affine(Rational::parse(p[0]), Rational::parse(p[1]));
}

struct UsageError {
  std::string message;
};

// Parsed arguments, filled in by CLI11.
struct Args {
  std::vector<std::string> verify_values;
  std::string m;
  std::string to;
  std::string triple, hyperbolic, sumdiff;
  std::size_t steps = 5;
  std::string a, op = "info", point = "P", point2 = "O", n = "2";
  std::string bound;
  std::uint64_t block_width = 100000;
  unsigned workers = 1;
  std::string checkpoint, output, format = "jsonl", arith = "auto";
  std::optional<std::uint64_t> max_blocks;
  bool naive = false;
};

struct Commands {
  CLI::App app{"Exact arithmetic for three squares with square differences", "sqdiff"};
  Args args;
  CLI::App* verify;
  CLI::App* generate;
  CLI::App* convert;
  CLI::App* cycle;
  CLI::App* dbl;
  CLI::App* fiber;
  CLI::App* search;
  bool version = false;

  Commands() {
    app.set_help_flag();
    app.add_flag("--version", version, "Print the version as JSON");
    app.require_subcommand(0, 1);

    verify = app.add_subcommand("verify", "Validate a triple and print it with its certificate (t,u,v)");
    verify->add_option("values", args.verify_values, "x y z")->expected(3)->required();

    generate = app.add_subcommand("generate", "Euler's parametric solution for a rational m");
    generate->add_option("--m", args.m, "Parameter m as num/den")->required();

    convert = app.add_subcommand("convert", "Convert between the equivalent formulations");
    convert->add_option("--to", args.to, "Target: hyperbolic|euler|cuboid|sumdiff")
        ->required()
        ->check(CLI::IsMember({"hyperbolic", "euler", "cuboid", "sumdiff"}));
    add_inputs(convert, true);

    cycle = app.add_subcommand("cycle", "Iterate the order-5 cycle, one JSON line per step");
    add_inputs(cycle, false);
    cycle->add_option("--steps", args.steps, "Number of steps")->check(CLI::PositiveNumber);

    dbl = app.add_subcommand("double", "Iterate the doubling step, one JSON line per step");
    dbl->add_option("--triple", args.triple, "x,y,z")->required();
    dbl->add_option("--steps", args.steps, "Number of steps")->check(CLI::PositiveNumber);

    fiber = app.add_subcommand("fiber", "Fiber of a triple, or the group law on the fiber over a");
    auto* ft = fiber->add_option("--triple", args.triple, "x,y,z: print m, a and the fiber point");
    auto* fa = fiber->add_option("--a", args.a, "Fiber parameter a as num/den");
    ft->excludes(fa);
    fiber->add_option("--op", args.op, "info|contains|negate|double|add|mul")
        ->check(CLI::IsMember({"info", "contains", "negate", "double", "add", "mul"}));
    fiber->add_option("--point", args.point, "O|P|T|Q|inf+|inf-|s,w (default P)");
    fiber->add_option("--point2", args.point2, "Second operand for add (default O)");
    fiber->add_option("--n", args.n, "Multiplier for mul (default 2)");

    search = app.add_subcommand("search", "Enumerate primitive solutions with x < bound (JSONL/CSV records)");
    search->add_option("--bound", args.bound, "Exclusive bound N on x")->required();
    search->add_option("--block-width", args.block_width, "Hypotenuses per work block")->check(CLI::PositiveNumber);
    search->add_option("--workers", args.workers, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--checkpoint", args.checkpoint, "Checkpoint file (resumes when present)");
    search->add_option("--format", args.format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
    search->add_option("--output", args.output, "Write records to this file instead of stdout");
    search->add_option("--arith", args.arith, "auto|fast64|bigint")->check(CLI::IsMember({"auto", "fast64", "bigint"}));
    search->add_option("--max-blocks", args.max_blocks, "Stop after this many blocks (resumable)");
    search->add_flag("--naive", args.naive, "Use the quadratic oracle search (bound <= 100000)");
  }

  void add_inputs(CLI::App* sub, bool with_sumdiff) {
    auto* t = sub->add_option("--triple", args.triple, "Euler triple x,y,z");
    auto* h = sub->add_option("--hyperbolic", args.hyperbolic, "Hyperbolic triple a,b,c (num/den each)");
    t->excludes(h);
    if (with_sumdiff) {
      auto* s = sub->add_option("--sumdiff", args.sumdiff, "Sum/difference triple A,B,C");
      s->excludes(t)->excludes(h);
    }
  }
};

Json help_json(CLI::App& app) {
  Json j;
  j["name"] = app.get_name();
  j["description"] = app.get_description();
  Json opts = Json::array();
  for (const CLI::Option* o : app.get_options()) {
    Json oj;
    oj["name"] = o->get_name();
    oj["description"] = o->get_description();
    oj["required"] = o->get_required();
    oj["flag"] = o->get_expected_min() == 0;
    opts.push_back(oj);
  }
  j["options"] = opts;
  Json subs = Json::array();
  for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) subs.push_back(help_json(*s));
  if (!subs.empty()) j["subcommands"] = subs;
  return j;
}

EulerTriple euler_input(const Args& a) {
  if (!a.triple.empty()) {
    const auto v = parse_int3(a.triple, "--triple");
    return verify_euler(v[0], v[1], v[2]);
  }
  if (!a.hyperbolic.empty()) {
    const auto v = parse_rat3(a.hyperbolic, "--hyperbolic");
    return hyperbolic_to_euler(canonicalize_hyperbolic(v[0], v[1], v[2]));
  }
  if (!a.sumdiff.empty()) {
    const auto v = parse_int3(a.sumdiff, "--sumdiff");
    return sumdiff_to_euler({v[0], v[1], v[2]});
  }
  throw UsageError{"one of --triple, --hyperbolic or --sumdiff is required"};
}

int cmd_convert(const Args& a, std::ostream& out) {
  const EulerTriple e = euler_input(a);
  if (a.to == "hyperbolic") out << json::to_json(euler_to_hyperbolic(e)).dump() << '\n';
  if (a.to == "euler") out << json::to_json(e).dump() << '\n';
  if (a.to == "cuboid") out << json::to_json(euler_to_cuboid(e)).dump() << '\n';
  if (a.to == "sumdiff") out << json::to_json(euler_to_sumdiff(e)).dump() << '\n';
  return kExitOk;
}

int cmd_cycle(const Args& a, std::ostream& out) {
  if (!a.hyperbolic.empty()) {
    const auto v = parse_rat3(a.hyperbolic, "--hyperbolic");
    HyperbolicTriple h = canonicalize_hyperbolic(v[0], v[1], v[2]);
    for (std::size_t i = 0; i < a.steps; ++i) {
      h = engel_cycle_hyperbolic(h);
      out << json::to_json(h).dump() << '\n';
    }
    return kExitOk;
  }
  if (a.triple.empty()) throw UsageError{"one of --triple or --hyperbolic is required"};
  for (const EulerTriple& e : orbit(euler_input(a), a.steps)) out << json::to_json(e).dump() << '\n';
  return kExitOk;
}

int cmd_double(const Args& a, std::ostream& out) {
  SixTuple st = SixTuple::from(euler_input(a));
  for (std::size_t i = 0; i < a.steps; ++i) {
    st = doubling_step(st);
    out << json::to_json(st).dump() << '\n';
  }
  return kExitOk;
}

int cmd_fiber(const Args& a, std::ostream& out) {
  if (!a.triple.empty()) {
    const FiberLocation loc = fiber_of_triple(euler_input(a));
    out << Json{{"m", loc.m.to_string()}, {"a", loc.curve.a().to_string()}, {"point", json::to_json(loc.point)}}.dump()
        << '\n';
    return kExitOk;
  }
  if (a.a.empty()) throw UsageError{"one of --triple or --a is required"};
  const QuarticCurve C(Rational::parse(a.a));
  Json j{{"a", C.a().to_string()}, {"op", a.op}};
  if (a.op == "info") {
    const FiberModel model = to_weierstrass(C);
    j["weierstrass"] = Json{{"A", model.curve().A().to_string()},
                            {"B", model.curve().B().to_string()},
                            {"j", model.curve().j_invariant().to_string()}};
    j["O"] = json::to_json(QuarticCurve::origin());
    j["P"] = json::to_json(QuarticCurve::point_p());
    j["T"] = json::to_json(QuarticCurve::point_t());
    j["Q"] = json::to_json(euler_point(C));
  } else {
    const QuarticPoint p = parse_point(a.point, C);
    j["point"] = json::to_json(p);
    if (a.op == "contains") {
      j["result"] = contains(C, p);
    } else if (a.op == "negate") {
      j["result"] = json::to_json(negate(C, p));
    } else if (a.op == "double") {
      j["result"] = json::to_json(add(C, p, p));
    } else if (a.op == "add") {
      const QuarticPoint q = parse_point(a.point2, C);
      j["point2"] = json::to_json(q);
      j["result"] = json::to_json(add(C, p, q));
    } else {
      const Integer n = Integer::parse(a.n);
      j["n"] = n.to_string();
      j["result"] = json::to_json(mul(C, p, n));
    }
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_search(const Args& a, std::ostream& out, std::ostream& err, const std::atomic<bool>* interrupt) {
  const Integer bound = Integer::parse(a.bound);
  const EmitFormat fmt = a.format == "csv" ? EmitFormat::Csv : EmitFormat::Jsonl;

  if (a.naive) {
    if (bound.sign() < 0 || bound > Integer(kNaiveSearchLimit))
      throw Error(ErrorKind::Config, "N<=100000", "naive oracle search refuses bounds above 100000");
    const NaiveResult r = naive_oracle_search(bound.to_u64());
    StreamSink sink(out, fmt, true);
    sink.write(r.records);
    sink.flush();
    err << Json{{"count", r.count.to_string()}, {"completed", true}, {"method", "naive"}}.dump() << '\n';
    return kExitOk;
  }

  SearchConfig cfg;
  cfg.bound = bound;
  cfg.block_width = a.block_width;
  cfg.worker_count = a.workers;
  cfg.emit_format = fmt;
  cfg.arithmetic = a.arith == "bigint" ? ArithmeticMode::BigInt : a.arith == "fast64" ? ArithmeticMode::Fast64 : ArithmeticMode::Auto;
  cfg.max_blocks = a.max_blocks;
  if (!a.checkpoint.empty()) cfg.checkpoint_path = a.checkpoint;
  cfg.validate();

  std::optional<Checkpoint> resume;
  if (cfg.checkpoint_path) {
    resume = read_checkpoint(*cfg.checkpoint_path);
    if (resume && resume->config_hash != cfg.hash())
      throw Error(ErrorKind::Config, "config_hash", "checkpoint was written for a different bound/block width/format");
  }

  std::ofstream file;
  std::ostream* sink_stream = &out;
  if (!a.output.empty()) {
    std::optional<std::uint64_t> keep;
    if (resume) keep = resume->count.to_u64();
    truncate_output(a.output, fmt, keep);
    file.open(a.output, std::ios::app);
    if (!file) throw Error(ErrorKind::Io, "output", "cannot open " + a.output);
    sink_stream = &file;
  }
  StreamSink sink(*sink_stream, fmt, !resume);
  const SearchOutcome r = search(cfg, sink, interrupt);
  err << Json{{"count", r.count.to_string()},
              {"completed", r.completed},
              {"block_end", std::to_string(r.block_end)},
              {"isa", std::string(simd::isa_name(simd::selected_isa()))}}
             .dump()
      << '\n';
  if (!r.completed) {
    err << "search interrupted after x < " << r.block_end << "; ";
    if (cfg.checkpoint_path)
      err << "resume by re-running the same command (checkpoint " << cfg.checkpoint_path->string() << ")\n";
    else
      err << "re-run with --checkpoint PATH to make the search resumable\n";
    return kExitInterrupted;
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const std::atomic<bool>* interrupt) {
  Commands cmds;
  const bool wants_help = std::any_of(args.begin(), args.end(), [](const std::string& s) { return s == "--help" || s == "-h"; });
  if (wants_help) {
    CLI::App* target = &cmds.app;
    for (const std::string& s : args)
      for (CLI::App* sub : cmds.app.get_subcommands([](CLI::App*) { return true; }))
        if (sub->get_name() == s) target = sub;
    out << help_json(*target).dump(2) << '\n';
    return kExitOk;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cmds.app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "usage_error"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  }

  const Args& a = cmds.args;
  try {
    if (cmds.version) {
      out << Json{{"name", "sqdiff"}, {"version", std::string(kVersion)}}.dump() << '\n';
      return kExitOk;
    }
    if (cmds.verify->parsed()) {
      const auto& v = a.verify_values;
      const std::array<Integer, 3> xyz{Integer::parse(v[0]), Integer::parse(v[1]), Integer::parse(v[2])};
      out << json::to_json(verify_euler(xyz[0], xyz[1], xyz[2])).dump() << '\n';
      return kExitOk;
    }
    if (cmds.generate->parsed()) {
      const Rational m = Rational::parse(a.m);
      const SectionParams sp = params_from_m(m);
      out << Json{{"params", json::to_json(sp)}, {"triple", json::to_json(triple_from_m(m))}}.dump() << '\n';
      return kExitOk;
    }
    if (cmds.convert->parsed()) return cmd_convert(a, out);
    if (cmds.cycle->parsed()) return cmd_cycle(a, out);
    if (cmds.dbl->parsed()) return cmd_double(a, out);
    if (cmds.fiber->parsed()) return cmd_fiber(a, out);
    if (cmds.search->parsed()) return cmd_search(a, out, err, interrupt);
    err << Json{{"error", "usage_error"}, {"message", "a subcommand is required; see --help"}}.dump() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << Json{{"error", "usage_error"}, {"message", e.message}}.dump() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << Json{{"error", std::string(e.name())}, {"constraint", e.constraint()}, {"message", e.what()}}.dump() << '\n';
    return e.kind() == ErrorKind::Parse ? kExitUsage : kExitCoreError;
  }
}

}  // namespace sqdiff::cli
