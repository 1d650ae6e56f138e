#pragma once

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wasc/acceptance.hpp"
#include "wasc/wasc.hpp"

namespace wasc::cli {

enum ExitCode : int { kOk = 0, kSelftestFailed = 1, kParseError = 2, kDomainError = 3 };

enum class Format { text, csv, json };

using Json = nlohmann::ordered_json;

namespace detail {

struct Settings {
  unsigned threads = 1;
  Format format = Format::text;
};

inline unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

inline std::string join(const std::vector<std::string>& items, const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? separator : "") + items[i];
  return out;
}

inline void emit_json(std::ostream& out, const Json& payload) { out << payload.dump(2) << '\n'; }

inline std::vector<std::string> big_strings(const std::vector<BigCount>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

// count <pattern> <n>
inline int count(const std::string& pattern_text, std::size_t n, const Settings& s, std::ostream& out) {
  const Pattern p = parse_pattern(pattern_text);
  const BigCount total = count_avoiders(n, p, {effective_threads(s.threads)});
  switch (s.format) {
    case Format::text: out << total << '\n'; break;
    case Format::csv: out << "pattern,n,count\n" << to_string(p) << ',' << n << ',' << total << '\n'; break;
    case Format::json:
      emit_json(out, Json{{"command", "count"}, {"pattern", to_string(p)}, {"n", n}, {"count", total.str()}});
      break;
  }
  return kOk;
}

// list <pattern> <n>; the pattern "-" lists all of W_n.
inline int list(const std::string& pattern_text, std::size_t n, const Settings& s, std::ostream& out) {
  std::optional<Pattern> p;
  if (pattern_text != "-") p = parse_pattern(pattern_text);
  Json items = Json::array();
  if (s.format == Format::csv) out << "sequence\n";
  for_each_sequence(n, p, [&](const WeakAscentSequence& w) {
    const std::string text = to_string(w);
    if (s.format == Format::json) {
      items.push_back(text);
    } else {
      out << (s.format == Format::csv ? csv_field(text) : text) << '\n';
    }
  });
  if (s.format == Format::json) {
    emit_json(out, Json{{"command", "list"},
                        {"pattern", p ? to_string(*p) : std::string("-")},
                        {"n", n},
                        {"count", items.size()},
                        {"sequences", items}});
  }
  return kOk;
}

// series <pattern> --terms N: coefficients of x^0..x^N.
inline int series(const std::string& pattern_text, std::size_t terms, const Settings& s, std::ostream& out) {
  const Pattern p = parse_pattern(pattern_text);
  const auto solved = solved_pattern(p);
  if (!solved) throw DomainError("no generating function is available for " + to_string(p));
  const auto coeffs = big_strings(series_for_pattern(*solved, terms).integer_coefficients());
  switch (s.format) {
    case Format::text: out << join(coeffs, ",") << '\n'; break;
    case Format::csv:
      out << "n,coefficient\n";
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << ',' << coeffs[k] << '\n';
      break;
    case Format::json:
      emit_json(out, Json{{"command", "series"}, {"pattern", to_string(p)}, {"terms", terms}, {"coefficients", coeffs}});
      break;
  }
  return kOk;
}

inline std::vector<Pattern> table_patterns(const std::vector<std::string>& requested) {
  std::vector<Pattern> out;
  if (requested.empty() || (requested.size() == 1 && requested[0] == "all")) {
    for (auto name : reference::kLengthThreePatterns) out.push_back(parse_pattern(name));
    return out;
  }
  for (const auto& text : requested) out.push_back(parse_pattern(text));
  return out;
}

// table --max-n N --patterns all|p1,p2,...
inline int table(std::size_t max_n, const std::vector<std::string>& requested, const Settings& s,
                 std::ostream& out) {
  if (max_n < 1) throw DomainError("--max-n must be at least 1");
  const std::vector<Pattern> patterns = table_patterns(requested);
  std::vector<std::vector<std::string>> rows;
  for (const Pattern& p : patterns) {
    std::vector<BigCount> counts;
    for (std::size_t n = 1; n <= max_n; ++n) counts.push_back(count_avoiders(n, p, {effective_threads(s.threads)}));
    rows.push_back(big_strings(counts));
  }

  if (s.format == Format::json) {
    Json payload_rows = Json::array();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      payload_rows.push_back(Json{{"pattern", to_string(patterns[i])}, {"counts", rows[i]}});
    }
    emit_json(out, Json{{"command", "table"}, {"max_n", max_n}, {"rows", payload_rows}});
    return kOk;
  }
  if (s.format == Format::csv) {
    out << "pattern";
    for (std::size_t n = 1; n <= max_n; ++n) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < patterns.size(); ++i) out << to_string(patterns[i]) << ',' << join(rows[i], ",") << '\n';
    return kOk;
  }

  std::vector<std::size_t> width(max_n + 1, 0);
  width[0] = std::string("pattern").size();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    width[0] = std::max(width[0], to_string(patterns[i]).size());
    for (std::size_t n = 1; n <= max_n; ++n) width[n] = std::max(width[n], rows[i][n - 1].size());
  }
  for (std::size_t n = 1; n <= max_n; ++n) width[n] = std::max(width[n], std::to_string(n).size());
  out << std::left << std::setw(static_cast<int>(width[0])) << "pattern" << std::right;
  for (std::size_t n = 1; n <= max_n; ++n) out << "  " << std::setw(static_cast<int>(width[n])) << n;
  out << '\n';
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width[0])) << to_string(patterns[i]) << std::right;
    for (std::size_t n = 1; n <= max_n; ++n) out << "  " << std::setw(static_cast<int>(width[n])) << rows[i][n - 1];
    out << '\n';
  }
  return kOk;
}

inline const std::vector<std::string>& bijection_names() {
  static const std::vector<std::string> names{"bits001", "ops012", "comp012", "wmat", "aug021", "followers011"};
  return names;
}

// Forward maps go from the encoding to the weak ascent sequence, inverse maps
// the other way. Without --inverse, an input that can only be a sequence
// selects the inverse: non-empty sequences start with 0, which no
// composition, operation list, augmented sequence or matrix does. Bit strings
// also start with 0, so bits001 looks for a comma or a letter above 1.
// followers011 only runs forward (sequence to partition).
inline bool looks_like_sequence(const std::string& name, std::string_view input) {
  input = wasc::detail::trim(input);
  if (name == "followers011") return false;
  if (name == "bits001") return input.find_first_of(",23456789") != std::string_view::npos;
  return !input.empty() && input.front() == '0';
}

struct BijectionResult {
  std::string direction;
  std::string output;
};

inline BijectionResult apply_bijection(const std::string& name, const std::string& input, bool inverse) {
  if (name == "followers011") {
    if (inverse) throw DomainError("followers011 has no inverse map");
    return {"forward", format_partition(follower_partition(parse_sequence(input)))};
  }
  if (!inverse) {
    if (name == "bits001") return {"forward", to_string(bits_to_wasc001(parse_bits(input)))};
    if (name == "ops012") return {"forward", to_string(apply_ops(parse_operations(input)))};
    if (name == "comp012") return {"forward", to_string(apply_ops(composition_to_ops(parse_composition(input))))};
    if (name == "wmat") return {"forward", to_string(wmat_to_wasc(parse_wmatrix(input)))};
    if (name == "aug021") return {"forward", to_string(augmented_to_wasc021(parse_augmented(input)))};
  } else {
    const WeakAscentSequence w = parse_sequence(input);
    if (name == "bits001") return {"inverse", format_bits(wasc001_to_bits(w))};
    if (name == "ops012") return {"inverse", format_operations(wasc012_to_ops(w))};
    if (name == "comp012") return {"inverse", format_composition(ops_to_composition(wasc012_to_ops(w)))};
    if (name == "wmat") {
      std::string matrix = format_wmatrix(wasc_to_wmat(w));
      if (!matrix.empty() && matrix.back() == '\n') matrix.pop_back();
      return {"inverse", matrix};
    }
    if (name == "aug021") return {"inverse", format_augmented(wasc021_to_augmented(w))};
  }
  throw ParseError("unknown bijection '" + name + "'");
}

inline int bijection(const std::string& name, const std::string& input, bool inverse, const Settings& s,
                     std::ostream& out) {
  const bool use_inverse = inverse || looks_like_sequence(name, input);
  const BijectionResult result = apply_bijection(name, input, use_inverse);
  switch (s.format) {
    case Format::text: out << result.output << '\n'; break;
    case Format::csv:
      out << "name,direction,input,output\n"
          << name << ',' << result.direction << ',' << csv_field(input) << ',' << csv_field(result.output) << '\n';
      break;
    case Format::json:
      emit_json(out, Json{{"command", "bijection"},
                          {"name", name},
                          {"direction", result.direction},
                          {"input", input},
                          {"output", result.output}});
      break;
  }
  return kOk;
}

inline int conjecture(std::size_t max_n, const Settings& s, std::ostream& out) {
  const ConjectureReport report = conjecture_report(max_n, effective_threads(s.threads));
  switch (s.format) {
    case Format::text:
      out << std::setw(3) << "n" << "  " << std::setw(12) << "w_210(n)" << "  " << std::setw(12) << "2-41-3"
          << "  agree\n";
      for (const auto& row : report.rows) {
        out << std::setw(3) << row.n << "  " << std::setw(12) << row.sequences << "  " << std::setw(12)
            << row.permutations << "  " << (row.equal ? "yes" : "no") << '\n';
      }
      out << report.verdict() << '\n';
      break;
    case Format::csv:
      out << "n,w210,avoiders_2_41_3,agree\n";
      for (const auto& row : report.rows) {
        out << row.n << ',' << row.sequences << ',' << row.permutations << ',' << (row.equal ? "yes" : "no") << '\n';
      }
      break;
    case Format::json: {
      Json rows = Json::array();
      for (const auto& row : report.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"w210", row.sequences.str()},
                            {"avoiders_2_41_3", row.permutations.str()},
                            {"agree", row.equal}});
      }
      emit_json(out, Json{{"command", "conjecture"}, {"max_n", max_n}, {"rows", rows}, {"verdict", report.verdict()}});
      break;
    }
  }
  return kOk;
}

inline int selftest(const Settings& s, std::ostream& out) {
  acceptance::Options options;
  options.threads = effective_threads(s.threads);
  return acceptance::run_all(out, options) ? kOk : kSelftestFailed;
}

}  // namespace detail

// Runs one command line (without the program name). Results go to `out`,
// diagnostics and the elapsed time to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak ascent sequences: pattern avoidance counts, series, bijections"};
  app.name("wasc");
  app.require_subcommand(1);

  detail::Settings settings;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  auto add_common = [&](CLI::App* sub, bool threaded) {
    sub->add_option("--format", settings.format, "text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    if (threaded) sub->add_option("--threads", settings.threads, "worker threads (0 = all cores)");
  };

  std::string pattern;
  std::size_t n = 0;
  std::size_t max_n = 10;
  std::size_t terms = 10;
  std::vector<std::string> patterns;
  std::string name, input;
  bool inverse = false;

  auto* count = app.add_subcommand("count", "number of weak ascent sequences of length n avoiding a pattern");
  count->add_option("pattern", pattern)->required();
  count->add_option("n", n)->required();
  add_common(count, true);

  auto* list = app.add_subcommand("list", "weak ascent sequences of length n avoiding a pattern ('-' for none)");
  list->add_option("pattern", pattern)->required();
  list->add_option("n", n)->required();
  add_common(list, false);

  auto* series = app.add_subcommand("series", "generating function coefficients for a solved pattern");
  series->add_option("pattern", pattern)->required();
  series->add_option("--terms", terms, "highest power of x");
  add_common(series, false);

  auto* table = app.add_subcommand("table", "avoider counts for n = 1..max-n");
  table->add_option("--max-n", max_n);
  table->add_option("--patterns", patterns, "'all' or a list of patterns")->delimiter(',');
  add_common(table, true);

  auto* bijection = app.add_subcommand("bijection", "apply one of the structural correspondences");
  bijection->add_option("name", name)->required()->check(CLI::IsMember(detail::bijection_names()));
  bijection->add_option("input", input)->required();
  bijection->add_flag("--inverse", inverse, "map a weak ascent sequence back to the encoding");
  add_common(bijection, false);

  auto* conjecture = app.add_subcommand("conjecture", "compare w_210(n) with 2-41-3 avoiding permutations");
  std::size_t conjecture_max_n = 9;
  conjecture->add_option("--max-n", conjecture_max_n);
  add_common(conjecture, true);

  auto* selftest = app.add_subcommand("selftest", "run every acceptance criterion");
  add_common(selftest, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*count) code = detail::count(pattern, n, settings, out);
    else if (*list) code = detail::list(pattern, n, settings, out);
    else if (*series) code = detail::series(pattern, terms, settings, out);
    else if (*table) code = detail::table(max_n, patterns, settings, out);
    else if (*bijection) code = detail::bijection(name, input, inverse, settings, out);
    else if (*conjecture) code = detail::conjecture(conjecture_max_n, settings, out);
    else if (*selftest) code = detail::selftest(settings, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "elapsed " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
  return code;
}

}  // namespace wasc::cli
