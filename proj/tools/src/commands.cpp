#include "knotrep_cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "knotrep/characters.hpp"
#include "knotrep/errors.hpp"
#include "knotrep/fixtures.hpp"
#include "knotrep_cli/json_io.hpp"

namespace knotrep::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_pd(const std::string& text) { return text.find('X') != std::string::npos; }

struct Context {
  Knot knot;
  AlexanderModulePresentation module;
  LaurentPoly delta;
  std::vector<QPoly> lambdas;
};

Context context(const JobSpec& job) {
  Context c{resolve_knot(job), {}, {}, {}};
  c.module = alexander_module(c.knot.presentation);
  c.delta = alexander_polynomial(c.module);
  c.lambdas = invariant_factors_Q(c.module);
  return c;
}

json header(const Context& c, const std::string& command) {
  return {{"knot", c.knot.label}, {"command", command}};
}

}  // namespace

Knot resolve_knot(const JobSpec& job) {
  const int sources = job.fixture.has_value() + job.braid.has_value() + job.pd.has_value() + job.file.has_value();
  if (sources != 1) throw InputError("give exactly one of --fixture, --braid, --pd, --file");
  Knot k;
  if (job.fixture) {
    k.label = *job.fixture;
    k.presentation = braid_to_wirtinger(fixture(*job.fixture).braid);
  } else if (job.braid) {
    k.label = "braid " + *job.braid;
    k.presentation = braid_to_wirtinger(parse_braid(*job.braid));
  } else if (job.pd) {
    const bool is_file = std::filesystem::is_regular_file(*job.pd);
    k.label = is_file ? *job.pd : "pd " + *job.pd;
    k.presentation = parse_pd(is_file ? read_file(*job.pd) : *job.pd);
  } else {
    const std::string text = read_file(*job.file);
    k.label = *job.file;
    k.presentation = looks_like_pd(text) ? parse_pd(text)
                                         : braid_to_wirtinger(parse_fixture(*job.file, text).braid);
  }
  if (auto problem = validate(k.presentation); !problem.empty()) throw InconsistentDiagram(problem);
  return k;
}

std::vector<int> degrees(const JobSpec& job, int default_lo, int default_hi) {
  int lo = default_lo, hi = default_hi;
  if (job.n && job.n_range) throw InputError("--n and --n-range are exclusive");
  if (job.n) lo = hi = *job.n;
  if (job.n_range) {
    static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(*job.n_range, m, range)) throw SyntaxError("--n-range expects A..B, got " + *job.n_range);
    lo = std::stoi(m[1]);
    hi = std::stoi(m[2]);
  }
  if (lo < 1 || hi < lo) throw InputError("degrees must satisfy 1 <= A <= B");
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

json cmd_alexander(const JobSpec& job) {
  const Context c = context(job);
  json out = header(c, "alexander");
  out["delta"] = to_json(c.delta);
  json factors = json::array();
  for (const auto& f : invariant_factors_Q(c.module)) factors.push_back(to_json(f));
  out["invariant_factors"] = factors;
  const auto profile = cyclotomic_root_profile(c.delta);
  out["cyclotomic_divisors"] = profile.divisors;
  out["m"] = profile.m ? json(*profile.m) : json(nullptr);
  return out;
}

json cmd_homology(const JobSpec& job) {
  const Context c = context(job);
  json out = header(c, "homology");
  json covers = json::array();
  for (int n : degrees(job, 1, 6)) {
    const CoverHomology h = homology_Ln(c.module, n);
    const OrderCheck check = verify_order_formula(h, c.delta);
    json entry = to_json(h);
    entry["resultant"] = to_json(check.resultant_value);
    entry["agree"] = check.agree;
    entry["betti_formula"] = betti_Ln(c.delta, n);
    entry["betti_invariant_factors"] = betti_Ln(c.lambdas, n);
    covers.push_back(entry);
  }
  out["covers"] = covers;
  return out;
}

json cmd_count(const JobSpec& job) {
  const Context c = context(job);
  json out = header(c, "count");
  DivisorTower tower(c.module);
  json reports = json::array();
  for (int n : degrees(job, 2, 6)) reports.push_back(to_json(count_report(n, tower)));
  out["reports"] = reports;
  return out;
}

json cmd_reps(const JobSpec& job) {
  const Context c = context(job);
  json out = header(c, "reps");
  const auto& w = c.knot.presentation;
  if (job.emit_matrices) out["presentation"] = to_json(w);
  DivisorTower tower(c.module);
  json per_n = json::array();
  for (int n : degrees(job, 2, 2)) {
    json entry = {{"n", n}};
    const auto cover = tower.get(n);
    if (!cover->group.finite()) {
      entry["verdict"] = to_string(infinite_case(n, tower));
      entry["reps"] = json::array();
      per_n.push_back(entry);
      continue;
    }
    const DirectCount count = count_direct(n, tower);
    if (!count.classes) throw InputError("too many characters to enumerate at n = " + std::to_string(n));
    entry["classes"] = to_json(*count.classes);
    json reps = json::array();
    for (const auto& id : count.class_ids) {
      Character chi;
      chi.n = n;
      chi.exponents = id;
      const MetabelianRep r = build_sl_rep(w, *cover, chi);
      json item = {{"class_id", id}, {"N", r.root_order}};
      if (job.emit_matrices) item["rep"] = to_json(r, true);
      if (job.verify) item["verification"] = to_json(verify_rep(r, w));
      reps.push_back(item);
    }
    entry["reps"] = reps;
    per_n.push_back(entry);
  }
  out["degrees"] = per_n;
  if (job.numeric) out["faithful_reducible"] = to_json(build_faithful_reducible(w, c.module));
  return out;
}

json cmd_analyze(const JobSpec& job) {
  const Context c = context(job);
  json out = header(c, "analyze");
  DivisorTower tower(c.module);
  out["delta"] = to_json(c.delta);
  out["report"] = to_json(existence_report(c.delta, invariant_factors_Q(c.module), tower, job.n_max));
  return out;
}

json cmd_verify(const json& document) {
  const WirtingerPresentation w = presentation_from_json(document.at("presentation"));
  json results = json::array();
  bool all = true;
  for (const auto& entry : document.at("degrees")) {
    for (const auto& item : entry.at("reps")) {
      const MetabelianRep r = rep_from_json(item.at("rep"));
      const VerificationReport v = verify_rep(r, w);
      all = all && v.all_pass();
      results.push_back({{"n", r.n}, {"class_id", r.class_id}, {"verification", to_json(v)}});
    }
  }
  return {{"command", "verify"}, {"all_pass", all}, {"results", results}};
}

json run_job(const JobSpec& job) {
  if (job.command == "alexander") return cmd_alexander(job);
  if (job.command == "homology") return cmd_homology(job);
  if (job.command == "count") return cmd_count(job);
  if (job.command == "reps") return cmd_reps(job);
  if (job.command == "analyze") return cmd_analyze(job);
  throw InputError("unknown command '" + job.command + "'");
}

namespace {

void add_job_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--fixture", job.fixture, "built-in knot name");
  sub->add_option("--braid", job.braid, "braid word, e.g. \"1 1 1 @2\"");
  sub->add_option("--pd", job.pd, "PD code, inline or a file");
  sub->add_option("--file", job.file, "braid (fixture format) or PD file");
  sub->add_option("--n", job.n, "cover degree");
  sub->add_option("--n-range", job.n_range, "degree range A..B");
  sub->add_option("--nmax", job.n_max, "largest degree for analyze");
  sub->add_option("--json", job.json_out, "also write the JSON report to this path");
  sub->add_flag("--emit-matrices", job.emit_matrices, "include representation matrices");
  sub->add_flag("--verify", job.verify, "verify every representation");
  sub->add_flag("--numeric", job.numeric, "include the floating-point reducible representation");
}

void write_output(const json& result, const std::optional<std::string>& path, std::ostream& out) {
  out << result.dump(2) << "\n";
  if (path) {
    std::ofstream f(*path);
    if (!f) throw InputError("cannot write " + *path);
    f << result.dump(2) << "\n";
  }
}

// Splits a batch line into arguments, honoring double quotes.
std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> args;
  std::string cur;
  bool quoted = false, any = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
      if (any || !cur.empty()) args.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += ch;
    }
  }
  if (quoted) throw SyntaxError("unbalanced quote in batch line: " + line);
  if (any || !cur.empty()) args.push_back(cur);
  return args;
}

JobSpec parse_job_line(const std::string& line) {
  std::vector<std::string> args = split_line(line);
  if (args.empty()) throw SyntaxError("empty batch line");
  CLI::App app{"knotrep batch job"};
  JobSpec job;
  job.command = args.front();
  add_job_options(&app, job);
  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw SyntaxError("batch line '" + line + "': " + e.what());
  }
  return job;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvariantViolation*>(&e)) return 3;
  if (dynamic_cast<const Error*>(&e)) return 2;
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return 2;
  return 3;
}

json error_json(const std::exception& e) {
  return {{"error", e.what()}, {"exit_code", exit_code_for(e)}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"knotrep: metabelian representations of knot groups"};
  app.require_subcommand(1);
  JobSpec job;
  const std::pair<const char*, const char*> commands[] = {
      {"alexander", "Alexander polynomial, invariant factors, cyclotomic profile"},
      {"homology", "H1 of the n-fold cyclic branched covers with the resultant cross-check"},
      {"count", "conjugacy classes of irreducible metabelian SL(n) reps (default n = 2..6)"},
      {"reps", "build and optionally verify one rep per class (default n = 2)"},
      {"analyze", "per-degree existence verdicts up to --nmax"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_job_options(sub, job);
    sub->callback([&job, name] { job.command = name; });
  }
  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-verify reps emitted by `reps --emit-matrices`");
  verify->add_option("input", verify_path, "JSON file")->required();
  std::optional<std::string> verify_json;
  verify->add_option("--json", verify_json, "also write the JSON report to this path");
  verify->callback([&job] { job.command = "verify"; });
  std::string batch_path;
  std::optional<std::string> batch_json;
  auto* batch = app.add_subcommand("batch", "run newline-delimited jobs (\"count --fixture trefoil --n 3\")");
  batch->add_option("input", batch_path, "job file, '-' for stdin")->required();
  batch->add_option("--json", batch_json, "also write the JSON report to this path");
  batch->callback([&job] { job.command = "batch"; });
  app.add_subcommand("fixtures", "list built-in knots")->callback([&job] { job.command = "fixtures"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (job.command == "fixtures") {
      json list = json::array();
      for (const auto& f : fixtures()) list.push_back({{"name", f.name}, {"description", f.description}});
      write_output(list, std::nullopt, out);
      return 0;
    }
    if (job.command == "verify") {
      const json result = cmd_verify(json::parse(read_file(verify_path)));
      write_output(result, verify_json, out);
      return result.at("all_pass").get<bool>() ? 0 : 3;
    }
    if (job.command == "batch") {
      std::string text;
      if (batch_path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        text = s.str();
      } else {
        text = read_file(batch_path);
      }
      std::vector<std::string> lines;
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
      }
      // Jobs run concurrently; results keep input order.
      std::vector<std::future<std::pair<json, int>>> futures;
      for (const auto& line : lines) {
        futures.push_back(std::async(std::launch::async, [line]() -> std::pair<json, int> {
          try {
            return {run_job(parse_job_line(line)), 0};
          } catch (const std::exception& e) {
            return {error_json(e), exit_code_for(e)};
          }
        }));
      }
      json results = json::array();
      int code = 0;
      for (auto& f : futures) {
        auto [result, c] = f.get();
        results.push_back(result);
        code = std::max(code, c);
      }
      write_output(results, batch_json, out);
      return code;
    }
    write_output(run_job(job), job.json_out, out);
    return 0;
  } catch (const std::exception& e) {
    err << "knotrep: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace knotrep::cli
