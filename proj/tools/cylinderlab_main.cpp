// Command-line surface over the cylinderlab library. All interchange is JSON
// on stdin/stdout/files; runs with fixed seeds and inputs are byte-identical.
//
// Exit codes: 0 success, 1 predicate-false (not divisible, not in span,
// failed verification, precondition violations), 2 input errors (malformed
// JSON, bad flags, scale guards).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cylinderlab/generate.hpp"
#include "cylinderlab/json_io.hpp"
#include "cylinderlab/poly.hpp"
#include "cylinderlab/span_solver.hpp"
#include "cylinderlab/structure.hpp"
#include "cylinderlab/weights.hpp"
#include "cylinderlab/z_lift.hpp"

namespace {

using nlohmann::json;
using namespace cylinderlab;

constexpr int kExitOk = 0;
constexpr int kExitPredicateFalse = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  std::string input;
  std::string inline_json;
  std::string output;
  std::string format = "json";
  unsigned long long seed = 0;
  bool seed_set = false;
};

void add_io_options(CLI::App* cmd, CommonOpts& opts, bool with_input) {
  if (with_input) {
    cmd->add_option("input", opts.input, "Input file path, or - for stdin");
    cmd->add_option("--inline", opts.inline_json, "Inline JSON input");
  }
  cmd->add_option("--output", opts.output, "Write the result here instead of stdout");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));
}

void add_seed_option(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.seed, "Random seed (falls back to CYLINDERLAB_SEED, then 0)")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
}

unsigned long long effective_seed(const CommonOpts& opts) {
  if (opts.seed_set) return opts.seed;
  if (const char* env = std::getenv("CYLINDERLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw JsonError("environment variable CYLINDERLAB_SEED is not an integer");
    }
  }
  return 0;
}

std::string read_input(const CommonOpts& opts) {
  if (!opts.inline_json.empty()) return opts.inline_json;
  if (opts.input.empty()) {
    throw JsonError("no input: pass a file path, - for stdin, or --inline JSON");
  }
  if (opts.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(opts.input);
  if (!in) throw JsonError("cannot open input file \"" + opts.input + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool pretty(const CommonOpts& opts) { return opts.format == "pretty"; }

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw JsonError("cannot open output file \"" + opts.output + "\"");
  out << text << "\n";
}

void emit_json(const CommonOpts& opts, const json& j) {
  emit(opts, pretty(opts) ? j.dump(2) : j.dump());
}

json weight_as_json(const WeightZ& w) { return json::parse(weight_to_json(w)); }

Direction parse_direction_arg(const PrimeModulus& p, const std::string& text) {
  std::array<int, 3> v{};
  std::istringstream is(text);
  std::string part;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(is, part, ',')) throw JsonError("direction must be three comma-separated residues");
    try {
      v[i] = std::stoi(part);
    } catch (const std::exception&) {
      throw JsonError("direction component \"" + part + "\" is not an integer");
    }
  }
  if (std::getline(is, part, ',')) throw JsonError("direction must have exactly three components");
  return canonical_direction(p, v);
}

std::vector<int> parse_bijection_arg(const std::string& text, int p) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw JsonError("bijection entry \"" + part + "\" is not an integer");
    }
  }
  if (out.empty()) {
    out.resize(p);
    for (int i = 0; i < p; ++i) out[i] = i;
  }
  return out;
}

int run_check(const CommonOpts& opts) {
  const WeightZ w = weight_from_json(read_input(opts));
  const DivisibilityReport report = is_p_divisible(w);
  emit(opts, divisibility_to_json(w.p, report, pretty(opts)));
  return report.divisible ? kExitOk : kExitPredicateFalse;
}

int run_decompose(const CommonOpts& opts, const std::string& family_arg) {
  const WeightZ raw = weight_from_json(read_input(opts));
  const WeightFp target = reduce_mod_p(raw);
  const FamilyTag tag = family_from_name(family_arg);
  if (tag == FamilyTag::CylinderType) {
    throw JsonError("family must be one of planes, lines, diffs");
  }
  const auto solver = solver_for(target.p, tag);
  const SolveResult result = solver->solve(target);
  if (std::holds_alternative<NotInSpan>(result)) {
    const json j{{"in_span", false},
                 {"witness", json::parse(weight_to_json(std::get<NotInSpan>(result).witness))}};
    emit_json(opts, j);
    return kExitPredicateFalse;
  }
  emit(opts, combination_to_json(solver->family(), std::get<FpCombination>(result), target,
                                 pretty(opts)));
  return kExitOk;
}

int run_lift(const CommonOpts& opts, bool multiset) {
  const WeightZ w = weight_from_json(read_input(opts));
  const ZCertificate cert = multiset ? lift_multiset(w) : lift_set(w);
  emit(opts, certificate_to_json(cert, pretty(opts)));
  return kExitOk;
}

int run_verify(const CommonOpts& opts) {
  const ZCertificate cert = certificate_from_json(read_input(opts));
  const bool valid = verify_certificate(cert);
  emit_json(opts, json{{"valid", valid}});
  return valid ? kExitOk : kExitPredicateFalse;
}

int run_analyze(const CommonOpts& opts) {
  const WeightZ w = weight_from_json(read_input(opts));
  const PrimeModulus p = w.p;
  const DivisibilityReport div = is_p_divisible(w);

  json j{{"p", p.value()},
         {"total_weight", total_weight(w)},
         {"support", support_size(w)},
         {"zero_one", is_zero_one(w)},
         {"divisible", json::parse(divisibility_to_json(p, div))}};

  j["cylinder_direction"] = nullptr;
  if (is_zero_one(w) && total_weight(w) == p.square()) {
    if (const auto dir = is_cylinder(w)) {
      j["cylinder_direction"] = json::array({dir->v[0], dir->v[1], dir->v[2]});
    }
  }

  j["determined_directions"] = nullptr;
  j["non_determined_directions"] = nullptr;
  if (is_zero_one(w)) {
    const DirectionReport dr = determined_directions(w);
    j["determined_directions"] = dr.determined.size();
    j["non_determined_directions"] = dr.undetermined.size();
  }

  const auto full = contains_full_line(w);
  j["full_line"] = full ? json(to_text(p, *full)) : json(nullptr);

  emit_json(opts, j);
  return kExitOk;
}

int run_scc(const CommonOpts& opts, int p_value, int workers) {
  const SearchReport report = exhaustive_scc_check(PrimeModulus(p_value), workers);
  emit(opts, search_report_to_json(report, pretty(opts)));
  return report.violations.empty() ? kExitOk : kExitPredicateFalse;
}

int run_skew(const CommonOpts& opts, int p_value, const std::string& bijection_arg) {
  const PrimeModulus p(p_value);
  const std::vector<int> sigma = parse_bijection_arg(bijection_arg, p.value());
  const WeightZ w = skew_lines_construction(p, sigma);
  const auto full = contains_full_line(w);

  json j{{"p", p.value()},
         {"bijection", sigma},
         {"weight", weight_as_json(w)},
         {"report",
          json{{"total_weight", total_weight(w)},
               {"support", support_size(w)},
               {"zero_one", is_zero_one(w)},
               {"full_line", full ? json(to_text(p, *full)) : json(nullptr)},
               {"size_note", skew_size_note(p)}}}};
  emit_json(opts, j);
  return kExitOk;
}

int run_minsearch(const CommonOpts& opts, int p_value, int max_support,
                  unsigned long long budget) {
  const PrimeModulus p(p_value);
  const SearchReport report = min_support_search(p, max_support, budget, effective_seed(opts));
  json j = json::parse(search_report_to_json(report));
  if (report.best) {
    const auto full = contains_full_line(report.best->first);
    j["best"]["contains_full_line"] = full ? json(to_text(p, *full)) : json(nullptr);
  }
  emit_json(opts, j);
  return kExitOk;
}

int run_generate_cylinder(const CommonOpts& opts, int p_value, const std::string& dir_arg) {
  const PrimeModulus p(p_value);
  const Direction dir = parse_direction_arg(p, dir_arg);
  emit(opts, weight_to_json(generate_cylinder(p, dir, effective_seed(opts)), pretty(opts)));
  return kExitOk;
}

int run_generate_indexed(const CommonOpts& opts, int p_value, size_t index, bool plane) {
  const PrimeModulus p(p_value);
  const WeightZ w = plane ? generate_plane_weight(p, index) : generate_line_weight(p, index);
  emit(opts, weight_to_json(w, pretty(opts)));
  return kExitOk;
}

int run_generate_random(const CommonOpts& opts, int p_value, int terms, bool multiset) {
  const PrimeModulus p(p_value);
  if (multiset) {
    emit(opts, weight_to_json(generate_random_divisible_multiset(p, effective_seed(opts)),
                              pretty(opts)));
  } else {
    emit(opts,
         weight_to_json(generate_random_divisible(p, effective_seed(opts), terms), pretty(opts)));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-divisible weight analysis over F_p^3: divisibility checks, span\n"
               "decompositions, integer cylinder certificates, and structure reports."};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* check = app.add_subcommand("check", "p-divisibility of a weight");
  add_io_options(check, opts, true);

  auto* decompose = app.add_subcommand("decompose", "Solve a weight over a generator family");
  std::string family = "diffs";
  decompose->add_option("--family", family, "Generator family")
      ->check(CLI::IsMember({"planes", "lines", "diffs"}));
  add_io_options(decompose, opts, true);

  auto* lift = app.add_subcommand("lift", "Integer certificates for sets and multisets");
  lift->require_subcommand(1);
  auto* lift_set_cmd = lift->add_subcommand("set", "Certify a {0,1} set of size p^2");
  add_io_options(lift_set_cmd, opts, true);
  auto* lift_multi_cmd = lift->add_subcommand("multiset", "Certify a multiset of total p^2");
  add_io_options(lift_multi_cmd, opts, true);

  auto* verify = app.add_subcommand("verify", "Re-evaluate a certificate independently");
  add_io_options(verify, opts, true);

  auto* analyze = app.add_subcommand("analyze", "Cylinder, direction and full-line report");
  add_io_options(analyze, opts, true);

  auto* scc = app.add_subcommand("scc", "Exhaustive divisible-set check at p <= 3");
  int scc_p = 2;
  int workers = 1;
  scc->add_option("--p", scc_p, "Prime (2 or 3)")->required();
  scc->add_option("--workers", workers, "Worker threads (result is identical for any N)");
  add_io_options(scc, opts, false);

  auto* skew = app.add_subcommand("skew", "Skew-lines construction");
  int skew_p = 3;
  std::string bijection;
  skew->add_option("--p", skew_p, "Prime")->required();
  skew->add_option("--bijection", bijection, "Comma-separated permutation of 0..p-1 (default identity)");
  add_io_options(skew, opts, false);

  auto* minsearch = app.add_subcommand("minsearch", "Randomized small-support search");
  int ms_p = 3;
  int max_support = 0;
  unsigned long long budget = 2000;
  minsearch->add_option("--p", ms_p, "Prime")->required();
  minsearch->add_option("--max-support", max_support, "Strict support bound (0 = p(p-2)+1)");
  minsearch->add_option("--budget", budget, "Candidate evaluations");
  add_io_options(minsearch, opts, false);
  add_seed_option(minsearch, opts);

  auto* generate = app.add_subcommand("generate", "Seeded instance generators");
  generate->require_subcommand(1);
  int gen_p = 3;
  std::string dir_arg = "0,0,1";
  size_t gen_index = 0;
  int gen_terms = 0;
  bool gen_multiset = false;

  auto* gen_cyl = generate->add_subcommand("cylinder", "Union of p disjoint parallel lines");
  gen_cyl->add_option("--p", gen_p, "Prime")->required();
  gen_cyl->add_option("--dir", dir_arg, "Direction as a,b,c");
  add_io_options(gen_cyl, opts, false);
  add_seed_option(gen_cyl, opts);

  auto* gen_plane = generate->add_subcommand("plane", "Indicator of an enumerated plane");
  gen_plane->add_option("--p", gen_p, "Prime")->required();
  gen_plane->add_option("--index", gen_index, "Plane index in enumeration order");
  add_io_options(gen_plane, opts, false);

  auto* gen_line = generate->add_subcommand("line", "Indicator of an enumerated line");
  gen_line->add_option("--p", gen_p, "Prime")->required();
  gen_line->add_option("--index", gen_index, "Line index in enumeration order");
  add_io_options(gen_line, opts, false);

  auto* gen_rand = generate->add_subcommand("random-divisible", "Seeded p-divisible weight");
  gen_rand->add_option("--p", gen_p, "Prime")->required();
  gen_rand->add_option("--terms", gen_terms, "Difference terms to combine (0 = 2p)");
  gen_rand->add_flag("--multiset", gen_multiset,
                     "Nonnegative multiset of total p^2 (plane plus lifted differences)");
  add_io_options(gen_rand, opts, false);
  add_seed_option(gen_rand, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(opts);
    if (decompose->parsed()) return run_decompose(opts, family);
    if (lift_set_cmd->parsed()) return run_lift(opts, false);
    if (lift_multi_cmd->parsed()) return run_lift(opts, true);
    if (verify->parsed()) return run_verify(opts);
    if (analyze->parsed()) return run_analyze(opts);
    if (scc->parsed()) return run_scc(opts, scc_p, workers);
    if (skew->parsed()) return run_skew(opts, skew_p, bijection);
    if (minsearch->parsed()) return run_minsearch(opts, ms_p, max_support, budget);
    if (gen_cyl->parsed()) return run_generate_cylinder(opts, gen_p, dir_arg);
    if (gen_plane->parsed()) return run_generate_indexed(opts, gen_p, gen_index, true);
    if (gen_line->parsed()) return run_generate_indexed(opts, gen_p, gen_index, false);
    if (gen_rand->parsed()) return run_generate_random(opts, gen_p, gen_terms, gen_multiset);
    std::cerr << "input error: no subcommand\n";
    return kExitInputError;
  } catch (const PreconditionViolated& e) {
    json j{{"error", "PreconditionViolated"}, {"message", e.what()}};
    if (e.witness_plane && e.modulus != 0) {
      j["witness"] = json{{"plane", to_text(PrimeModulus(e.modulus), *e.witness_plane)},
                          {"sum", e.witness_sum}};
    }
    std::cout << j.dump() << "\n";
    return kExitPredicateFalse;
  } catch (const SizeViolation& e) {
    std::cout << json{{"error", "SizeViolation"}, {"message", e.what()}}.dump() << "\n";
    return kExitPredicateFalse;
  } catch (const NotAMultiset& e) {
    std::cout << json{{"error", "NotAMultiset"}, {"message", e.what()}}.dump() << "\n";
    return kExitPredicateFalse;
  } catch (const NotRepresentable& e) {
    std::cout << json{{"error", "NotRepresentable"}, {"message", e.what()}}.dump() << "\n";
    return kExitPredicateFalse;
  } catch (const LiftObstruction& e) {
    json j{{"error", "LiftObstruction"}, {"message", e.what()},
           {"stuck", json::parse(weight_to_json(e.stuck))}};
    std::cout << j.dump() << "\n";
    return kExitPredicateFalse;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
