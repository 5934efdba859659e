#include "lefkit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lefkit/arrangement.hpp"
#include "lefkit/gin.hpp"
#include "lefkit/groebner.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/text_io.hpp"
#include "lefkit/version.hpp"

namespace lefkit {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string input;
  std::string vars;
  std::string output = "text";
  std::optional<std::uint64_t> seed;
  int trials = 5;
  std::string bound = "1000000";
  int workers = 1;
  bool asserted = false;
};

std::uint64_t resolve_seed(const CommonOpts& opts) {
  if (opts.seed) return *opts.seed;
  if (const char* env = std::getenv("LEFKIT_SEED")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("LEFKIT_SEED must be a nonnegative integer, got '" + s + "'");
    }
    return std::stoull(s);
  }
  return 0;
}

GinOptions gin_options(const CommonOpts& opts) {
  GinOptions g;
  g.seed = resolve_seed(opts);
  g.trial_budget = opts.trials;
  if (opts.bound.empty() ||
      opts.bound.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("--bound must be a positive integer, got '" + opts.bound + "'");
  }
  g.bound = mpz_class(opts.bound);
  g.workers = opts.workers;
  return g;
}

struct IdealInput {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

// The positional input is a file when it names one on disk, otherwise an
// inline generator list that needs --vars. Files start with a `vars:` header.
IdealInput load_ideal_input(const CommonOpts& opts) {
  if (opts.input.empty()) throw Error("missing input (file or inline generators)");
  if (std::filesystem::exists(opts.input)) {
    std::ifstream in(opts.input);
    if (!in) throw Error("cannot read '" + opts.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::istringstream lines(buffer.str());
    std::string line;
    int lineno = 0;
    RingPtr ring;
    int header_line = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      std::size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos || line[a] == '#') continue;
      if (line.compare(a, 5, "vars:") == 0) {
        ring = parse_vars(line.substr(a + 5));
        header_line = lineno;
        break;
      }
      throw ParseError("expected a 'vars:' header", lineno, static_cast<int>(a) + 1);
    }
    if (!ring) throw ParseError("missing 'vars:' header", lineno + 1, 1);
    std::string tail;
    while (std::getline(lines, line)) tail += line + "\n";
    // Leading blank lines keep parse errors aligned with file line numbers.
    std::string padded(static_cast<std::size_t>(header_line), '\n');
    return {ring, parse_polynomial_list(padded + tail, ring)};
  }
  if (opts.vars.empty()) {
    throw Error("inline input needs --vars (or pass a file with a vars: header)");
  }
  RingPtr ring = parse_vars(opts.vars);
  return {ring, parse_polynomial_list(opts.input, ring)};
}

std::string vars_line(const RingPtr& ring) {
  std::string out;
  for (const std::string& n : ring->var_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

ordered_json json_header(const std::string& command, const CommonOpts& opts) {
  ordered_json j;
  j["tool"] = "lefkit";
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = resolve_seed(opts);
  return j;
}

ordered_json json_input(const IdealInput& input) {
  ordered_json j;
  j["vars"] = input.ring->var_names();
  std::vector<std::string> gens;
  gens.reserve(input.generators.size());
  for (const Polynomial& g : input.generators) gens.push_back(format_polynomial(g));
  j["generators"] = gens;
  return j;
}

std::vector<std::string> gen_strings(const MonomialIdeal& I) {
  std::vector<std::string> out;
  out.reserve(I.min_gens().size());
  for (const Monomial& g : I.min_gens()) out.push_back(format_monomial(g, *I.ring()));
  return out;
}

ordered_json json_matrix(const SectionalMatrix& m) {
  ordered_json j;
  j["reg"] = m.reg();
  j["rows"] = m.rows();
  return j;
}

ordered_json json_witness(const LefschetzWitness& w) {
  ordered_json j;
  j["level"] = w.level;
  j["degree_from"] = w.degree_from;
  j["degree_to"] = w.degree_to;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

std::string describe_witness(const LefschetzWitness& w) {
  std::ostringstream s;
  s << "level j = " << w.level << ", degrees " << w.degree_from << " -> "
    << w.degree_to << ", value " << w.lhs << " where full rank needs " << w.rhs;
  return s.str();
}

void emit(const ordered_json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

int cmd_gin(const CommonOpts& opts, std::ostream& out) {
  IdealInput input = load_ideal_input(opts);
  GinResult result = rgin(Ideal(input.ring, input.generators), gin_options(opts));
  int reg = regularity_stable(result.ideal).value;
  if (opts.output == "json") {
    ordered_json j = json_header("gin", opts);
    j["input"] = json_input(input);
    ordered_json r;
    r["generators"] = gen_strings(result.ideal);
    r["regularity"] = reg;
    r["trials_used"] = result.trials_used;
    r["certified_stable"] = result.certified_stable;
    r["bound"] = result.final_bound.get_str();
    r["certificate"] = result.certificate;
    j["result"] = r;
    emit(j, out);
  } else {
    out << "vars: " << vars_line(input.ring) << "\n"
        << "rgin: " << format_monomial_ideal(result.ideal) << "\n"
        << "regularity: " << reg << "\n"
        << "trials used: " << result.trials_used << "\n"
        << "coefficient bound: " << result.final_bound.get_str() << "\n"
        << "certificate: " << result.certificate << "\n"
        << "seed: " << result.seed << "\n";
  }
  return 0;
}

int cmd_hilbert(const CommonOpts& opts, int dmax, std::ostream& out) {
  if (dmax < 0) throw Error("--dmax must be nonnegative");
  IdealInput input = load_ideal_input(opts);
  Ideal I(input.ring, input.generators);
  std::vector<long long> values;
  values.reserve(static_cast<std::size_t>(dmax) + 1);
  for (int d = 0; d <= dmax; ++d) values.push_back(hilbert_function_ideal(I, d));
  if (opts.output == "json") {
    ordered_json j = json_header("hilbert", opts);
    j["input"] = json_input(input);
    ordered_json r;
    r["dmax"] = dmax;
    r["values"] = values;
    j["result"] = r;
    emit(j, out);
  } else {
    out << "vars: " << vars_line(input.ring) << "\n";
    out << "HF(S/I, 0.." << dmax << "):";
    for (long long v : values) out << " " << v;
    out << "\n";
  }
  return 0;
}

int cmd_sectional(const CommonOpts& opts, std::ostream& out) {
  IdealInput input = load_ideal_input(opts);
  GinResult gin = rgin(Ideal(input.ring, input.generators), gin_options(opts));
  SectionalMatrix m = sectional_matrix(gin.ideal);
  if (opts.output == "json") {
    ordered_json j = json_header("sectional", opts);
    j["input"] = json_input(input);
    ordered_json r;
    r["gin"] = gen_strings(gin.ideal);
    r["matrix"] = json_matrix(m);
    j["result"] = r;
    emit(j, out);
  } else {
    out << "vars: " << vars_line(input.ring) << "\n"
        << "rgin: " << format_monomial_ideal(gin.ideal) << "\n"
        << "regularity: " << m.reg() << "\n"
        << format_sectional_matrix(m);
  }
  return 0;
}

int cmd_lefschetz(const CommonOpts& opts, const std::string& mode,
                  std::optional<int> k_opt, std::ostream& out) {
  IdealInput input = load_ideal_input(opts);
  Ideal I(input.ring, input.generators);
  GinResult gin = rgin(I, gin_options(opts));
  int l = input.ring->nvars();
  int k = k_opt.value_or(l);
  LevelCheck check = mode == "wlp" ? has_k_wlp(gin.ideal, k) : has_k_slp(gin.ideal, k);
  SectionalMatrix m = sectional_matrix(gin.ideal);
  if (opts.output == "json") {
    ordered_json j = json_header("lefschetz", opts);
    j["input"] = json_input(input);
    ordered_json r;
    r["mode"] = mode;
    r["k"] = k;
    r["holds"] = check.holds;
    if (check.witness) r["witness"] = json_witness(*check.witness);
    r["gin"] = gen_strings(gin.ideal);
    r["regularity"] = m.reg();
    r["matrix"] = json_matrix(m);
    j["result"] = r;
    emit(j, out);
  } else {
    out << "vars: " << vars_line(input.ring) << "\n"
        << "rgin: " << format_monomial_ideal(gin.ideal) << "\n"
        << "question: " << k << "-" << (mode == "wlp" ? "WLP" : "SLP") << "\n"
        << "holds: " << (check.holds ? "true" : "false") << "\n";
    if (check.witness) out << "witness: " << describe_witness(*check.witness) << "\n";
    out << "sectional matrix (reg = " << m.reg() << "):\n"
        << format_sectional_matrix(m);
  }
  return opts.asserted && !check.holds ? 1 : 0;
}

int cmd_arrangement(const CommonOpts& opts, std::ostream& out) {
  if (opts.input.empty()) throw Error("missing arrangement file");
  if (!std::filesystem::exists(opts.input)) {
    throw Error("cannot read '" + opts.input + "'");
  }
  std::ifstream in(opts.input);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Arrangement a = parse_arrangement_file(buffer.str());
  GinOptions gopts = gin_options(opts);
  Polynomial q = defining_polynomial(a);
  FreenessVerdict verdict = is_free(a, gopts);
  ShapeCheck shape = rgin_shape_check(a, gopts);
  std::optional<ConjectureReport> conjecture;
  if (a.ring()->nvars() >= 3) conjecture = check_conjecture(a, gopts);
  LefschetzReport lef = analyze_lefschetz(verdict.gin);
  if (opts.output == "json") {
    ordered_json j = json_header("arrangement", opts);
    ordered_json in_j;
    in_j["vars"] = a.ring()->var_names();
    std::vector<std::string> forms;
    for (const Polynomial& f : a.forms()) forms.push_back(format_polynomial(f));
    in_j["forms"] = forms;
    j["input"] = in_j;
    ordered_json r;
    r["n"] = a.size();
    r["central"] = a.is_central();
    r["defining_polynomial"] = format_polynomial(q);
    r["gin"] = gen_strings(verdict.gin);
    r["free"] = verdict.free;
    if (verdict.free) {
      r["lambda"] = verdict.lambda;
    } else {
      r["violation"] = verdict.reason;
      if (verdict.violating_generator) {
        r["violating_generator"] =
            format_monomial(*verdict.violating_generator, *a.ring());
      }
    }
    r["shape_check_ok"] = shape.ok;
    if (conjecture) {
      ordered_json c;
      c["holds"] = conjecture->holds;
      c["vacuous"] = conjecture->vacuous;
      c["d0"] = conjecture->d0;
      std::vector<std::string> offenders;
      for (const Monomial& g : conjecture->offenders) {
        offenders.push_back(format_monomial(g, *a.ring()));
      }
      c["offenders"] = offenders;
      r["conjecture"] = c;
    }
    r["k_wlp_max"] = lef.k_wlp_max;
    r["k_slp_max"] = lef.k_slp_max;
    r["regularity"] = lef.regularity.value;
    r["matrix"] = json_matrix(lef.matrix);
    j["result"] = r;
    emit(j, out);
  } else {
    out << "arrangement: " << a.size() << " hyperplanes in " << a.ring()->nvars()
        << " variables (" << vars_line(a.ring()) << ")\n"
        << "Q = " << format_polynomial(q) << "\n"
        << "rgin(J): " << format_monomial_ideal(verdict.gin) << "\n"
        << "free: " << (verdict.free ? "true" : "false") << "\n";
    if (verdict.free) {
      out << "lambda:";
      for (int v : verdict.lambda) out << " " << v;
      out << "\n";
    } else {
      out << "violation: " << verdict.reason << "\n";
    }
    out << "shape check: " << (shape.ok ? "pass" : "FAIL") << "\n";
    if (conjecture) {
      out << "conjecture: " << (conjecture->holds ? "holds" : "COUNTEREXAMPLE");
      if (conjecture->vacuous) {
        out << " (vacuous, rgin = S)";
      } else {
        out << " (d0 = " << conjecture->d0;
        if (conjecture->offenders.empty()) {
          out << ", no offenders)";
        } else {
          out << ", offenders:";
          for (const Monomial& g : conjecture->offenders) {
            out << " " << format_monomial(g, *a.ring());
          }
          out << ")";
        }
      }
      out << "\n";
    }
    out << "k-WLP max: " << lef.k_wlp_max << "\n"
        << "k-SLP max: " << lef.k_slp_max << "\n"
        << "sectional matrix (reg = " << lef.regularity.value << "):\n"
        << format_sectional_matrix(lef.matrix);
  }
  return opts.asserted && !verdict.free ? 1 : 0;
}

const char* kind_name(SampleOutcome::Kind k) {
  switch (k) {
    case SampleOutcome::Kind::kHolds: return "holds";
    case SampleOutcome::Kind::kVacuous: return "vacuous";
    case SampleOutcome::Kind::kCounterexample: return "counterexample";
    case SampleOutcome::Kind::kGinFailure: return "gin-failure";
  }
  return "unknown";
}

int cmd_conjecture_search(const CommonOpts& opts, ConjectureSearchParams params,
                          const std::string& dump_dir, std::ostream& out) {
  params.seed = resolve_seed(opts);
  params.gin = gin_options(opts);
  // Parallelism lives on the sample loop; per-sample gin trials stay serial.
  params.gin.workers = 1;
  params.workers = opts.workers;
  ConjectureSearchSummary summary = run_conjecture_search(params);
  std::vector<std::string> dumped;
  for (const SampleOutcome& o : summary.outcomes) {
    if (o.kind != SampleOutcome::Kind::kCounterexample || dump_dir.empty()) continue;
    std::filesystem::create_directories(dump_dir);
    Arrangement a = conjecture_sample(params, o.index);
    std::vector<std::string> comments = {
        std::string("lefkit ") + kVersion + " conjecture counterexample",
        "search seed " + std::to_string(params.seed) + ", sample " +
            std::to_string(o.index) + ", n = " + std::to_string(o.n),
        "gin seed " + std::to_string(o.gin_seed),
        "replay: lefkit arrangement <this file>"};
    std::filesystem::path path =
        std::filesystem::path(dump_dir) / ("sample-" + std::to_string(o.index) + ".arr");
    std::ofstream file(path);
    file << format_arrangement_file(a, comments);
    dumped.push_back(path.string());
  }
  if (opts.output == "json") {
    ordered_json j = json_header("conjecture-search", opts);
    ordered_json p;
    p["l"] = params.l;
    p["n_min"] = params.n_min;
    p["n_max"] = params.n_max;
    p["count"] = params.count;
    p["coeff_bound"] = params.coeff_bound;
    p["workers"] = params.workers;
    j["params"] = p;
    ordered_json r;
    r["holds"] = summary.holds;
    r["vacuous"] = summary.vacuous;
    r["counterexamples"] = summary.counterexamples;
    r["gin_failures"] = summary.gin_failures;
    ordered_json samples = ordered_json::array();
    for (const SampleOutcome& o : summary.outcomes) {
      ordered_json s;
      s["index"] = o.index;
      s["kind"] = kind_name(o.kind);
      s["n"] = o.n;
      if (o.kind == SampleOutcome::Kind::kCounterexample && o.report) {
        s["d0"] = o.report->d0;
        std::vector<std::string> offenders;
        for (const Monomial& g : o.report->offenders) {
          offenders.push_back(format_monomial(g, *o.report->gin.ring()));
        }
        s["offenders"] = offenders;
      }
      samples.push_back(s);
    }
    r["samples"] = samples;
    r["dumped"] = dumped;
    j["result"] = r;
    emit(j, out);
  } else {
    out << "conjecture search: " << params.count << " samples, l = " << params.l
        << ", n in [" << params.n_min << ", " << params.n_max
        << "], coefficient bound " << params.coeff_bound << ", seed " << params.seed
        << "\n"
        << "holds: " << summary.holds << "   vacuous: " << summary.vacuous
        << "   counterexamples: " << summary.counterexamples
        << "   gin failures: " << summary.gin_failures << "\n";
    for (const SampleOutcome& o : summary.outcomes) {
      if (o.kind != SampleOutcome::Kind::kCounterexample) continue;
      out << "counterexample at sample " << o.index << " (n = " << o.n << ")";
      if (o.report) {
        out << ": d0 = " << o.report->d0 << ", offenders:";
        for (const Monomial& g : o.report->offenders) {
          out << " " << format_monomial(g, *o.report->gin.ring());
        }
      }
      out << "\n";
    }
    for (const std::string& path : dumped) out << "dumped: " << path << "\n";
  }
  return opts.asserted && summary.counterexamples > 0 ? 1 : 0;
}

void add_io_options(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--output", o.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_gin_options(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--seed", o.seed,
                  "Random seed (default: LEFKIT_SEED from the environment, else 0)");
  sub->add_option("--trials", o.trials, "Trial budget for the randomized gin")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--bound", o.bound,
                  "Initial coefficient bound for random coordinate changes")
      ->capture_default_str();
  sub->add_option("--workers", o.workers, "Worker threads for independent trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_ideal_input(CLI::App* sub, CommonOpts& o) {
  sub->add_option("input", o.input,
                  "Ideal: a file with a vars: header, or inline generators");
  sub->add_option("--vars", o.vars, "Variable names for inline input, e.g. x,y,z");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations with generic initial ideals: sectional "
               "matrices, Lefschetz properties, hyperplane arrangements"};
  app.set_version_flag("--version", std::string("lefkit ") + kVersion);
  app.require_subcommand(1);
  int code = 0;

  CommonOpts gin_o;
  CLI::App* gin_cmd = app.add_subcommand("gin", "Generic initial ideal of an ideal");
  add_ideal_input(gin_cmd, gin_o);
  add_gin_options(gin_cmd, gin_o);
  add_io_options(gin_cmd, gin_o);
  gin_cmd->callback([&] { code = cmd_gin(gin_o, out); });

  CommonOpts hil_o;
  int dmax = 10;
  CLI::App* hil_cmd =
      app.add_subcommand("hilbert", "Hilbert function of S/I by exact counting");
  add_ideal_input(hil_cmd, hil_o);
  add_io_options(hil_cmd, hil_o);
  hil_cmd->add_option("--dmax", dmax, "Largest degree to evaluate")
      ->capture_default_str();
  hil_cmd->callback([&] { code = cmd_hilbert(hil_o, dmax, out); });

  CommonOpts sec_o;
  CLI::App* sec_cmd =
      app.add_subcommand("sectional", "Sectional matrix of S/I through rgin");
  add_ideal_input(sec_cmd, sec_o);
  add_gin_options(sec_cmd, sec_o);
  add_io_options(sec_cmd, sec_o);
  sec_cmd->callback([&] { code = cmd_sectional(sec_o, out); });

  CommonOpts lef_o;
  std::string mode;
  std::optional<int> k_opt;
  CLI::App* lef_cmd = app.add_subcommand(
      "lefschetz", "Decide the k-WLP or k-SLP of S/I on its generic initial ideal");
  add_ideal_input(lef_cmd, lef_o);
  lef_cmd->add_option("--mode", mode, "wlp or slp")
      ->required()
      ->check(CLI::IsMember({"wlp", "slp"}));
  lef_cmd->add_option("--k", k_opt, "Level to decide (default: number of variables)");
  lef_cmd->add_flag("--assert", lef_o.asserted,
                    "Exit 1 when the property does not hold");
  add_gin_options(lef_cmd, lef_o);
  add_io_options(lef_cmd, lef_o);
  lef_cmd->callback([&] { code = cmd_lefschetz(lef_o, mode, k_opt, out); });

  CommonOpts arr_o;
  CLI::App* arr_cmd = app.add_subcommand(
      "arrangement", "Analyze a central hyperplane arrangement file");
  CLI::App* arr_an = arr_cmd->add_subcommand(
      "analyze", "Freeness, shape, conjecture and Lefschetz report");
  arr_an->add_option("file", arr_o.input, "Arrangement file")->required();
  arr_an->add_flag("--assert", arr_o.asserted, "Exit 1 when the arrangement is not free");
  add_gin_options(arr_an, arr_o);
  add_io_options(arr_an, arr_o);
  arr_cmd->require_subcommand(1);
  arr_an->callback([&] { code = cmd_arrangement(arr_o, out); });

  CommonOpts con_o;
  ConjectureSearchParams params;
  std::string dump_dir;
  CLI::App* con_cmd = app.add_subcommand(
      "conjecture-search", "Batch conjecture check over random central arrangements");
  con_cmd->add_option("--count", params.count, "Number of samples")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  con_cmd->add_option("--l", params.l, "Number of variables")->capture_default_str();
  con_cmd->add_option("--n-min", params.n_min, "Smallest arrangement size")
      ->capture_default_str();
  con_cmd->add_option("--n-max", params.n_max, "Largest arrangement size")
      ->capture_default_str();
  con_cmd->add_option("--coeff-bound", params.coeff_bound,
                      "Coefficient bound for sampled forms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  con_cmd->add_option("--dump-dir", dump_dir,
                      "Directory for replayable counterexample files");
  con_cmd->add_flag("--assert", con_o.asserted,
                    "Exit 1 when a counterexample is found");
  add_gin_options(con_cmd, con_o);
  add_io_options(con_cmd, con_o);
  con_cmd->callback(
      [&] { code = cmd_conjecture_search(con_o, params, dump_dir, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lefkit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e, out, err);
    return c == 0 ? 0 : 2;
  } catch (const GinFailureError& e) {
    err << "gin failure: " << e.what() << "\n";
    for (const MonomialIdeal& c : e.candidates) {
      err << "  candidate: " << format_monomial_ideal(c) << "\n";
    }
    return 3;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace lefkit
