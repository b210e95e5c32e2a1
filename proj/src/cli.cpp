#include "vknot/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "vknot/cobordism.hpp"
#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"
#include "vknot/json_io.hpp"
#include "vknot/moves.hpp"
#include "vknot/transforms.hpp"

namespace vknot::cli {

namespace {

std::vector<long long> parse_pins(const std::string& text) {
  std::vector<long long> pins;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      pins.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail("bad_argument", "bad pinned base \"" + item + "\"");
    }
  }
  return pins;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) fail("bad_argument", "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Json& j, bool plain, std::ostream& out) {
  if (!plain) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << "\n";
  }
}

IndexPolynomial polynomial_of_labeling(const Diagram& d,
                                       const AffineLabeling& labeling) {
  IndexPolynomial p;
  for (const auto& w : crossing_weights(d, labeling)) {
    p.add_term(w.weight, w.sign);
    p.add_term(AffineExponent{}, -w.sign);
  }
  return p;
}

InvariantReport invariants_or_fail(const Diagram& d,
                                   const std::vector<long long>& pins) {
  InvariantReport report = pins.empty() ? compute_invariants(d)
                                        : compute_invariants_pinned(d, pins);
  if (!report.compatible) {
    std::string defects;
    for (long long v : report.defects)
      defects += (defects.empty() ? "" : ",") + std::to_string(v);
    fail("incompatible_link",
         "link is not compatible (per-component defects " + defects + ")");
  }
  return report;
}

Json batch_line_report(const std::string& file, int line_number,
                       const std::string& code,
                       const std::vector<long long>& pins) {
  Json entry;
  entry["file"] = file;
  entry["line"] = line_number;
  try {
    Diagram d = parse(code);
    Json report = report_to_json(d, invariants_or_fail(d, pins));
    for (auto& [key, value] : report.items()) entry[key] = std::move(value);
  } catch (const Error& e) {
    entry["error"] = Json{{"code", e.code()}, {"message", e.what()}};
  }
  return entry;
}

int run_batch(const std::vector<std::string>& paths,
              const std::vector<long long>& pins, int jobs, bool plain,
              std::ostream& out) {
  struct Line {
    std::string file;
    int number;
    std::string code;
  };
  std::vector<Line> lines;
  for (const auto& path : paths) {
    std::stringstream content(read_input(path));
    std::string code;
    int number = 0;
    while (std::getline(content, code)) lines.push_back({path, ++number, code});
  }
  std::vector<Json> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      results[i] =
          batch_line_report(lines[i].file, lines[i].number, lines[i].code, pins);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : results) emit(r, plain, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gauss-code invariants for virtual knots and links", "vknot"};
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "plain key: value output instead of JSON");
  app.fallthrough();

  std::string code, code2, pin_text, transform_name, trace_path = "-";
  int crossing = 0, arc1_pos = 0, arc2_pos = 0, moves = 10, jobs = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> paths;

  auto* cmd_parse = app.add_subcommand("parse", "validate and canonicalize a Gauss code");
  cmd_parse->add_option("code", code)->required();

  auto* cmd_inv = app.add_subcommand("invariants", "full invariant report");
  cmd_inv->add_option("code", code)->required();
  cmd_inv->add_option("--pin", pin_text, "comma-separated integer base per component");

  auto* cmd_compat = app.add_subcommand("compat", "labelability check for links");
  cmd_compat->add_option("code", code)->required();

  auto* cmd_transform = app.add_subcommand("transform", "reverse | mirror-flat | mirror-vertical | switch");
  cmd_transform->add_option("name", transform_name)
      ->required()
      ->check(CLI::IsMember({"reverse", "mirror-flat", "mirror-vertical", "switch"}));
  cmd_transform->add_option("code", code)->required();
  cmd_transform->add_option("--crossing", crossing, "crossing to switch");

  auto* cmd_sum = app.add_subcommand("connect-sum", "splice two knots");
  cmd_sum->add_option("code1", code)->required();
  cmd_sum->add_option("code2", code2)->required();
  cmd_sum->add_option("--arc1", arc1_pos, "splice arc position on the first knot");
  cmd_sum->add_option("--arc2", arc2_pos, "splice arc position on the second knot");

  auto* cmd_smooth = app.add_subcommand("smooth", "oriented smoothing at one crossing");
  cmd_smooth->add_option("code", code)->required();
  cmd_smooth->add_option("--crossing", crossing)->required();

  auto* cmd_reduce = app.add_subcommand("reduce", "smooth all null-weight crossings");
  cmd_reduce->add_option("code", code)->required();
  cmd_reduce->add_option("--pin", pin_text, "pinned bases (default all zero)");

  auto* cmd_genus = app.add_subcommand("genus", "Seifert statistics and four-ball genus bounds");
  cmd_genus->add_option("code", code)->required();

  auto* cmd_scramble = app.add_subcommand("scramble", "apply random moves");
  cmd_scramble->add_option("code", code)->required();
  cmd_scramble->add_option("--moves", moves, "number of moves");
  cmd_scramble->add_option("--seed", seed, "generator seed");

  auto* cmd_trace = app.add_subcommand("trace", "cobordism traces");
  auto* cmd_verify = cmd_trace->add_subcommand("verify", "replay a trace file");
  cmd_verify->add_option("code", code)->required();
  cmd_verify->add_option("--trace", trace_path, "JSON event list file, or - for stdin");

  auto* cmd_batch = app.add_subcommand("batch", "one report per input line");
  cmd_batch->add_option("paths", paths, "files of Gauss codes, - for stdin")->required();
  cmd_batch->add_option("--pin", pin_text);
  cmd_batch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", {{"code", "usage_error"}, {"message", e.what()}}}}.dump()
        << "\n";
    return 2;
  }

  try {
    std::vector<long long> pins =
        pin_text.empty() ? std::vector<long long>{} : parse_pins(pin_text);

    if (*cmd_parse) {
      Diagram d = parse(code);
      emit(Json{{"diagram", serialize(d)},
                {"components", d.component_count()},
                {"crossings", d.crossing_count()}},
           plain, out);
    } else if (*cmd_inv) {
      Diagram d = parse(code);
      Json report = report_to_json(d, invariants_or_fail(d, pins));
      if (d.is_knot()) {
        SeifertStats stats = seifert_stats(d);
        GenusBounds bounds = four_ball_genus_bounds(d);
        report["seifert"] =
            Json{{"n", stats.n}, {"r", stats.r}, {"genus", *stats.genus}};
        report["genus_bounds"] =
            Json{{"lower", bounds.lower},
                 {"upper", bounds.upper},
                 {"exact", bounds.exact ? Json(*bounds.exact) : Json(nullptr)}};
      }
      emit(report, plain, out);
    } else if (*cmd_compat) {
      Diagram d = parse(code);
      auto report = is_compatible(d);
      emit(Json{{"compatible", report.compatible}, {"defects", report.defects}},
           plain, out);
      return report.compatible ? 0 : 1;
    } else if (*cmd_transform) {
      Diagram d = parse(code);
      Diagram result;
      if (transform_name == "reverse")
        result = reverse(d);
      else if (transform_name == "mirror-flat")
        result = switch_all(d);
      else if (transform_name == "mirror-vertical")
        result = vertical_mirror(d);
      else
        result = switch_crossing(d, crossing);
      emit(Json{{"diagram", serialize(result)}}, plain, out);
    } else if (*cmd_sum) {
      Diagram k1 = parse(code), k2 = parse(code2);
      Diagram result = connected_sum(k1, {0, arc1_pos}, k2, {0, arc2_pos});
      emit(Json{{"diagram", serialize(result)}}, plain, out);
    } else if (*cmd_smooth) {
      Diagram d = parse(code);
      emit(Json{{"diagram", serialize(smooth_crossing(d, crossing))}}, plain, out);
    } else if (*cmd_reduce) {
      Diagram d = parse(code);
      if (pins.empty()) pins.assign(d.components.size(), 0);
      auto result = null_weight_reduction(d, compute_labeling_pinned(d, pins));
      IndexPolynomial p = polynomial_of_labeling(result.diagram, result.labeling);
      emit(Json{{"diagram", serialize(result.diagram)},
                {"polynomial", p.to_string()},
                {"polynomial_terms", polynomial_terms_to_json(p)}},
           plain, out);
    } else if (*cmd_genus) {
      Diagram d = parse(code);
      SeifertStats stats = seifert_stats(d);
      Json j{{"diagram", serialize(d)}, {"n", stats.n}, {"r", stats.r}};
      j["genus"] = stats.genus ? Json(*stats.genus) : Json(nullptr);
      if (d.is_knot()) {
        GenusBounds bounds = four_ball_genus_bounds(d);
        j["exact_four_ball_genus"] =
            bounds.exact ? Json(*bounds.exact) : Json(nullptr);
        j["genus_bounds"] =
            Json{{"lower", bounds.lower},
                 {"upper", bounds.upper},
                 {"exact", bounds.exact ? Json(*bounds.exact) : Json(nullptr)}};
      }
      emit(j, plain, out);
    } else if (*cmd_scramble) {
      Diagram d = parse(code);
      auto result = scramble(d, moves, seed);
      Json trace = Json::array();
      for (const auto& site : result.trace) trace.push_back(site_to_json(site));
      emit(Json{{"diagram", serialize(result.diagram)},
                {"moves", moves},
                {"seed", seed},
                {"trace", std::move(trace)}},
           plain, out);
    } else if (*cmd_verify) {
      CobordismTrace trace;
      trace.start = parse(code);
      Json events;
      try {
        events = Json::parse(read_input(trace_path));
      } catch (const nlohmann::json::exception& e) {
        fail("bad_argument", std::string("trace file: ") + e.what());
      }
      trace.events = events_from_json(events);
      emit(trace_report_to_json(replay_trace(trace)), plain, out);
    } else if (*cmd_batch) {
      return run_batch(paths, pins, jobs, plain, out);
    }
  } catch (const Error& e) {
    err << Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump()
        << "\n";
    return e.code() == "syntax_error" ? 2 : 1;
  }
  return 0;
}

}  // namespace vknot::cli
