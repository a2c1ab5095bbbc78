#include "cliffq/cli/driver.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cliffq/cli/eval.hpp"
#include "cliffq/format.hpp"
#include "cliffq/metric_file.hpp"

namespace cliffq::cli {

namespace {

Signature parse_signature(const std::string& text) {
  Signature s;
  std::size_t* parts[] = {&s.p, &s.q, &s.r};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', start) : text.size();
    if (end == std::string::npos) break;
    const std::string field = text.substr(start, end - start);
    if (field.empty() || field.size() > 2 ||
        field.find_first_not_of("0123456789") != std::string::npos) {
      break;
    }
    *parts[i] = std::stoul(field);
    start = end + 1;
    if (i == 2) return s;
  }
  throw Error("--signature expects p,q,r (three non-negative integers), got '" + text + "'");
}

Engine parse_engine(const std::string& name) {
  if (name == "auto") return Engine::Auto;
  if (name == "oracle") return Engine::Oracle;
  return Engine::Fast;
}

std::string json_string_list(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", \"" : "\"") + xs[i] + "\"";
  return out + "]";
}

void print_table(const Context& ctx, bool json, std::ostream& out) {
  const CayleyListing t = cayley_table(ctx);
  if (json) {
    out << "{\"basis\": " << json_string_list(t.basis) << ", \"table\": [";
    for (std::size_t i = 0; i < t.products.size(); ++i) {
      std::vector<std::string> cells;
      for (const auto& m : t.products[i]) cells.push_back(format_human(m, ctx.labels));
      out << (i ? ", " : "") << json_string_list(cells);
    }
    out << "]}\n";
    return;
  }
  out << "*";
  for (const auto& b : t.basis) out << '\t' << b;
  out << '\n';
  for (std::size_t i = 0; i < t.products.size(); ++i) {
    out << t.basis[i];
    for (const auto& m : t.products[i]) out << '\t' << format_human(m, ctx.labels);
    out << '\n';
  }
}

// Joins "--opt VALUE" into "--opt=VALUE" so that values starting with '-'
// (like "-e1*e2") are not mistaken for options.
std::vector<std::string> attach_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued{"--signature", "--metric", "--preset",
                                               "--eval",      "--engine", "--format"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value =
        std::find(valued.begin(), valued.end(), args[i]) != valued.end() && i + 1 < args.size();
    if (takes_value) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact geometric algebra expression evaluator", "cliffq"};
  std::string signature;
  std::string metric;
  std::string preset_name;
  std::vector<std::string> evals;
  bool table = false;
  std::string engine = "auto";
  std::string format = "human";

  auto* sig_opt = app.add_option("--signature", signature, "Diagonal metric p,q,r");
  auto* metric_opt = app.add_option("--metric", metric, "Metric matrix file (JSON)");
  auto* preset_opt = app.add_option("--preset", preset_name, "Named algebra")
                         ->check(CLI::IsMember(preset_names()));
  sig_opt->excludes(metric_opt)->excludes(preset_opt);
  metric_opt->excludes(preset_opt);
  app.add_option("--eval", evals, "Expression to evaluate (repeatable)");
  app.add_flag("--table", table, "Print the blade multiplication table");
  app.add_option("--engine", engine, "Product engine")
      ->check(CLI::IsMember({"auto", "oracle", "fast"}));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));

  try {
    std::vector<std::string> argv = attach_values(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const bool json = format == "json";
  try {
    const int chosen = (sig_opt->count() > 0) + (metric_opt->count() > 0) + (preset_opt->count() > 0);
    if (chosen != 1) {
      throw Error("exactly one of --signature, --metric or --preset is required");
    }
    if (evals.empty() && !table) throw Error("nothing to do: give --eval EXPR or --table");
    const Engine eng = parse_engine(engine);
    const Context ctx = sig_opt->count() > 0
                            ? context_from_signature(parse_signature(signature), eng)
                        : metric_opt->count() > 0
                            ? context_from_metric(load_metric(metric), metric, eng)
                            : context_from_preset(preset_name, eng);
    for (const auto& source : evals) {
      const MV value = evaluate(source, ctx);
      out << (json ? format_json(value, ctx.labels) : format_human(value, ctx.labels)) << '\n';
    }
    if (table) print_table(ctx, json, out);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cliffq::cli
