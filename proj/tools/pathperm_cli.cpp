// pathperm command-line driver. Talks to the library through the C API only.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathperm/pathperm.h"

using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3, kFailure = 4 };

struct Failure {
  pp_status status;
  std::string message;
};

int exit_code(pp_status status) {
  switch (status) {
    case PP_OK: return kOk;
    case PP_INVALID_INPUT:
    case PP_UNSUPPORTED_PATTERN:
    case PP_UNSUPPORTED_INPUT:
    case PP_NOT_IN_IMAGE:
    case PP_NULL_ARGUMENT: return kUsage;
    case PP_RESOURCE_GUARD: return kResource;
    default: return kFailure;
  }
}

void check(pp_status status) {
  if (status != PP_OK) throw Failure{status, pp_last_error()};
}

// Owns a char* handed out by the library.
std::string take(char* s) {
  std::unique_ptr<char, void (*)(char*)> guard(s, pp_string_free);
  return s ? std::string(s) : std::string();
}

struct PermHandle {
  pp_perm* p = nullptr;
  ~PermHandle() { pp_perm_free(p); }
};
struct PathHandle {
  pp_path* p = nullptr;
  ~PathHandle() { pp_path_free(p); }
};
struct TableHandle {
  pp_table* p = nullptr;
  ~TableHandle() { pp_table_free(p); }
};

struct Common {
  std::string format = "text";
  std::string output;
  unsigned workers = 1;
  std::size_t limit = 10;
  bool allow_large = false;
  std::string cache;

  pp_options options() const {
    pp_options o;
    pp_options_default(&o);
    o.workers = workers;
    o.limit = limit;
    o.allow_large = allow_large ? 1 : 0;
    o.cache_dir = cache.empty() ? nullptr : cache.c_str();
    return o;
  }
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto n = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const auto lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    const auto lo = std::stoul(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const auto hi = std::stoul(hi_text, &used);
    if (used != hi_text.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Failure{PP_INVALID_INPUT, "n must be a number or a range lo..hi, got '" + text + "'"};
  }
}

std::string yes_no(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---- renderers: each returns the document and whether everything passed ----

std::string render_tables(const std::vector<ordered_json>& tables, const std::string& tau,
                          const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["tau"] = tau;
    j["tables"] = tables;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "n,r,count\n";
    for (const auto& t : tables) {
      for (const auto& [r, c] : t["counts"].items()) {
        out << t["n"].get<std::size_t>() << "," << r << "," << c.get<std::string>() << "\n";
      }
    }
  } else {
    for (const auto& t : tables) {
      out << "n=" << t["n"].get<std::size_t>() << " tau=" << tau << ":";
      for (const auto& [r, c] : t["counts"].items()) out << " r=" << r << ":" << c.get<std::string>();
      out << "  (total " << t["total"].get<std::string>() << ")\n";
    }
  }
  return out.str();
}

std::string render_rows(const ordered_json& report, const std::string& format) {
  std::ostringstream out;
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") {
    out << "tau,r,n,brute,expected,pass\n";
    for (const auto& row : report["rows"]) {
      out << row["tau"].get<std::string>() << "," << row["r"].get<int>() << ","
          << row["n"].get<std::size_t>() << "," << row["brute"].get<std::string>() << ","
          << row["expected"].get<std::string>() << "," << (row["pass"].get<bool>() ? 1 : 0) << "\n";
    }
    return out.str();
  }
  const bool conj = report["kind"] == "conjectures";
  for (const auto& row : report["rows"]) {
    out << (conj ? "CONJECTURE " : "") << "tau=" << row["tau"].get<std::string>()
        << " r=" << row["r"].get<int>() << " n=" << row["n"].get<std::size_t>()
        << "  brute=" << row["brute"].get<std::string>()
        << (conj ? "  gf=" : "  formula=") << row["expected"].get<std::string>() << "  "
        << yes_no(row["pass"].get<bool>()) << "\n";
  }
  out << report["kind"].get<std::string>() << ": " << yes_no(report["pass"].get<bool>()) << "\n";
  return out.str();
}

std::string render_checks(const ordered_json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream out;
  if (format == "csv") {
    out << "kind,name,pass\n";
    for (const auto& c : report["checks"]) {
      out << report["kind"].get<std::string>() << ",\"" << c["name"].get<std::string>() << "\","
          << (c["pass"].get<bool>() ? 1 : 0) << "\n";
    }
    return out.str();
  }
  for (const auto& c : report["checks"]) {
    out << yes_no(c["pass"].get<bool>()) << "  " << c["name"].get<std::string>();
    if (c.contains("first_mismatch") && !c["first_mismatch"].is_null()) {
      out << "  (first mismatch at t^" << c["first_mismatch"].get<std::size_t>() << ")";
    }
    if (c.contains("checked")) out << "  [" << c["checked"].get<std::uint64_t>() << " checked]";
    if (c.contains("counterexample") && !c["counterexample"].get<std::string>().empty()) {
      out << "  counterexample: " << c["counterexample"].get<std::string>();
    }
    out << "\n";
  }
  out << report["kind"].get<std::string>() << ": " << yes_no(report["pass"].get<bool>()) << "\n";
  return out.str();
}

std::string render_general_form(const ordered_json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream out;
  if (format == "csv") {
    out << "tau,r,pass,p_degree,q_degree,checked_equations\n";
    for (const auto& row : report["results"]) {
      out << row["tau"].get<std::string>() << "," << row["r"].get<int>() << ","
          << (row["pass"].get<bool>() ? 1 : 0) << "," << row["p_degree"].get<int>() << ","
          << row["q_degree"].get<int>() << "," << row["checked_equations"].get<std::size_t>() << "\n";
    }
    return out.str();
  }
  for (const auto& row : report["results"]) {
    out << yes_no(row["pass"].get<bool>()) << "  " << (row["conjecture"].get<bool>() ? "CONJECTURE " : "")
        << "tau=" << row["tau"].get<std::string>() << " r=" << row["r"].get<int>() << "  "
        << row["detail"].get<std::string>() << "\n";
  }
  out << "general-form: " << yes_no(report["pass"].get<bool>()) << "\n";
  return out.str();
}

std::string render_list(const std::string& key, const ordered_json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream out;
  if (format == "csv") out << key << "\n";
  for (const auto& item : doc[key]) out << item.get<std::string>() << "\n";
  return out.str();
}

std::string single_value(const std::string& key, const std::string& value, const std::string& format) {
  if (format == "json") return ordered_json{{key, value}}.dump(2) + "\n";
  if (format == "csv") return key + "\n" + value + "\n";
  return value + "\n";
}

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::trunc);
  if (!out || !(out << text)) throw Failure{PP_IO, "cannot write " + common.output};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pathperm: permutations with prescribed numbers of length-3 pattern occurrences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pp_version()));

  Common common;
  if (const char* env = std::getenv("PATHPERM_CACHE")) common.cache = env;
  const auto add_common = [&](CLI::App* sub, bool enumerates) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", common.output, "Write to a file instead of stdout");
    if (enumerates) {
      sub->add_option("--workers", common.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
      sub->add_option("--limit", common.limit, "Largest n enumerated without --allow-large");
      sub->add_flag("--allow-large", common.allow_large, "Allow n up to 12 (slow)");
      sub->add_option("--cache", common.cache, "Table cache directory (default: $PATHPERM_CACHE)");
    }
  };

  // table
  std::string table_tau = "312", table_n = "0..9";
  auto* table = app.add_subcommand("table", "Occurrence distribution over S_n by brute force");
  table->add_option("--tau", table_tau, "Length-3 pattern, e.g. 312, 321 or 231");
  table->add_option("--n", table_n, "n or range lo..hi");
  add_common(table, true);

  // verify
  bool v_formulas = false, v_conjectures = false, v_assemblies = false, v_general = false, v_audit = false;
  std::size_t n_max = 9, order = 40;
  std::optional<std::size_t> order_opt;
  auto* verify = app.add_subcommand("verify", "Check formulas, conjectures and identities");
  verify->add_flag("--formulas", v_formulas, "Closed counting formulas vs brute force");
  verify->add_flag("--conjectures", v_conjectures, "Conjectured (3,2,1) r=3,4 series vs brute force");
  verify->add_flag("--assemblies", v_assemblies, "Path assemblies vs closed generating functions");
  verify->add_flag("--general-form", v_general, "Rational structure in x and sqrt(1-4x)");
  verify->add_flag("--audit", v_audit, "Exhaustive bijection audit for n <= n-max");
  verify->add_option("--n-max", n_max, "Largest n for brute-force checks");
  verify->add_option("--order", order_opt, "Truncation order in t = sqrt(x) (default 40; 80 for --general-form)")
      ->check(CLI::PositiveNumber);
  add_common(verify, true);

  // map / decode
  std::string map_perm, map_tau = "312";
  auto* map = app.add_subcommand("map", "Encode a permutation as a lattice path");
  map->add_option("permutation", map_perm, "Permutation, e.g. 4,3,5,1,2")->required();
  map->add_option("--tau", map_tau, "312, 321 or avoiding")
      ->check(CLI::IsMember({"312", "321", "avoiding"}));
  add_common(map, false);

  std::string dec_path, dec_mode = "psi312";
  auto* decode = app.add_subcommand("decode", "Decode a lattice path into a permutation");
  decode->add_option("path", dec_path, "Path literal over U, D, J")->required();
  decode->add_option("--mode", dec_mode, "312avoid, 321avoid, psi312 or psi321")
      ->check(CLI::IsMember({"312avoid", "321avoid", "psi312", "psi321"}));
  add_common(decode, false);

  // analyze
  std::string an_perm, an_tau = "312";
  auto* analyze = app.add_subcommand("analyze", "Per-jump occurrence predictions for a permutation");
  analyze->add_option("permutation", an_perm)->required();
  analyze->add_option("--tau", an_tau)->check(CLI::IsMember({"312", "321"}));
  add_common(analyze, false);

  // bases / class
  std::string bases_tau = "312";
  int bases_r = 2;
  auto* bases = app.add_subcommand("bases", "List tau-bases with exactly r occurrences");
  bases->add_option("--tau", bases_tau)->check(CLI::IsMember({"312", "321"}));
  bases->add_option("--r", bases_r)->check(CLI::Range(0, 3));
  add_common(bases, true);

  std::string class_tau = "312";
  std::size_t class_n = 4, class_r = 0;
  auto* klass = app.add_subcommand("class", "List the permutations of S_n with exactly r occurrences");
  klass->add_option("--tau", class_tau);
  klass->add_option("--n", class_n)->required();
  klass->add_option("--r", class_r)->required();
  add_common(klass, true);

  // render
  std::string render_path, svg_file;
  auto* render = app.add_subcommand("render", "Draw a lattice path");
  render->add_option("path", render_path)->required();
  render->add_option("--svg", svg_file, "Also write an SVG drawing to this file");
  add_common(render, false);

  // series
  std::string series_tau = "321";
  int series_r = 1;
  std::size_t series_n = 20;
  auto* series = app.add_subcommand("series", "Coefficients of a generating function");
  series->add_option("--tau", series_tau)->check(CLI::IsMember({"312", "321"}));
  series->add_option("--r", series_r);
  series->add_option("--n-max", series_n);
  add_common(series, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    const auto opts = common.options();
    const auto& fmt = common.format;

    if (table->parsed()) {
      const auto [lo, hi] = parse_range(table_n);
      std::vector<ordered_json> tables;
      std::string tau_name;
      for (std::size_t n = lo; n <= hi; ++n) {
        TableHandle t;
        check(pp_table_compute(n, table_tau.c_str(), &opts, &t.p));
        auto j = ordered_json::parse(take([&] {
          char* s = nullptr;
          check(pp_table_json(t.p, &s));
          return s;
        }()));
        tau_name = j["tau"].get<std::string>();
        tables.push_back(std::move(j));
      }
      emit(common, render_tables(tables, tau_name, fmt));
      return kOk;
    }

    if (verify->parsed()) {
      if (!(v_formulas || v_conjectures || v_assemblies || v_general || v_audit)) {
        std::cerr << "verify: choose at least one of --formulas, --conjectures, --assemblies, "
                     "--general-form, --audit\n"
                  << verify->help();
        return kUsage;
      }
      bool all = true;
      std::string text;
      ordered_json combined = ordered_json::array();
      const auto collect = [&](const std::string& doc, int pass, auto renderer) {
        auto j = ordered_json::parse(doc);
        all = all && pass;
        if (fmt == "json") {
          combined.push_back(j);
        } else {
          text += renderer(j, fmt);
        }
      };
      char* s = nullptr;
      int pass = 0;
      if (v_formulas) {
        check(pp_verify_formulas_json(n_max, &opts, &s, &pass));
        collect(take(s), pass, render_rows);
      }
      if (v_conjectures) {
        check(pp_verify_conjectures_json(n_max, &opts, &s, &pass));
        collect(take(s), pass, render_rows);
      }
      if (v_assemblies) {
        check(pp_verify_assemblies_json(order_opt.value_or(order), &s, &pass));
        collect(take(s), pass, render_checks);
      }
      if (v_general) {
        check(pp_verify_general_form_json(order_opt.value_or(80), &s, &pass));
        collect(take(s), pass, render_general_form);
      }
      if (v_audit) {
        for (const char* tau : {"312", "321"}) {
          for (std::size_t n = 0; n <= n_max; ++n) {
            check(pp_audit_json(n, tau, &opts, &s, &pass));
            auto j = ordered_json::parse(take(s));
            all = all && pass;
            if (fmt == "json") {
              combined.push_back(j);
            } else if (!pass || n == n_max) {
              text += "audit tau=" + std::string(tau) + " n=" + std::to_string(n) + "\n";
              text += render_checks(j, fmt);
            }
          }
        }
      }
      if (fmt == "json") {
        ordered_json doc;
        doc["pass"] = all;
        doc["reports"] = combined;
        text = doc.dump(2) + "\n";
      }
      emit(common, text);
      return all ? kOk : kMismatch;
    }

    if (map->parsed()) {
      PermHandle p;
      PathHandle path;
      check(pp_perm_parse(map_perm.c_str(), &p.p));
      check(pp_map(p.p, map_tau.c_str(), &path.p));
      char* s = nullptr;
      check(pp_path_to_string(path.p, &s));
      emit(common, single_value("path", take(s), fmt));
      return kOk;
    }

    if (decode->parsed()) {
      PathHandle path;
      PermHandle p;
      check(pp_path_parse(dec_path.c_str(), &path.p));
      check(pp_decode(path.p, dec_mode.c_str(), &p.p));
      char* s = nullptr;
      check(pp_perm_to_string(p.p, &s));
      emit(common, single_value("permutation", take(s), fmt));
      return kOk;
    }

    if (analyze->parsed()) {
      PermHandle p;
      check(pp_perm_parse(an_perm.c_str(), &p.p));
      char* s = nullptr;
      check(pp_analyze_jumps_json(p.p, an_tau.c_str(), &s));
      const auto j = ordered_json::parse(take(s));
      if (fmt == "json") {
        emit(common, j.dump(2) + "\n");
        return kOk;
      }
      std::ostringstream out;
      if (fmt == "csv") out << "jump,depth,l,m,predicted_total\n";
      else out << j["permutation"].get<std::string>() << " -> " << j["path"].get<std::string>()
               << "  (" << j["occurrences"].get<std::uint64_t>() << " occurrences)\n";
      std::size_t k = 0;
      for (const auto& jump : j["jumps"]) {
        ++k;
        if (fmt == "csv") {
          out << k << "," << jump["depth"] << "," << jump["l"] << "," << jump["m"] << ","
              << jump["predicted_total"] << "\n";
          continue;
        }
        out << "jump " << k << ": after " << jump["position"] << " down-steps, depth " << jump["depth"]
            << ", l=" << jump["l"] << ", m=" << jump["m"] << ", predicted " << jump["predicted_total"]
            << " occurrences";
        if (!jump["predicted_triples"].empty()) out << ": " << jump["predicted_triples"].dump();
        out << "\n";
      }
      emit(common, out.str());
      return kOk;
    }

    if (bases->parsed()) {
      char* s = nullptr;
      check(pp_bases_json(bases_tau.c_str(), bases_r, &opts, &s));
      emit(common, render_list("bases", ordered_json::parse(take(s)), fmt));
      return kOk;
    }

    if (klass->parsed()) {
      char* s = nullptr;
      check(pp_class_json(class_n, class_tau.c_str(), class_r, &opts, &s));
      emit(common, render_list("members", ordered_json::parse(take(s)), fmt));
      return kOk;
    }

    if (render->parsed()) {
      PathHandle path;
      check(pp_path_parse(render_path.c_str(), &path.p));
      int kind = 0;
      char* reason = nullptr;
      check(pp_path_classify(path.p, &kind, &reason));
      const auto why = take(reason);
      if (kind == 2) throw Failure{PP_INVALID_INPUT, "invalid path: " + why};
      char* s = nullptr;
      check(pp_path_render(path.p, 0, &s));
      const auto ascii = take(s);
      if (!svg_file.empty()) {
        check(pp_path_render(path.p, 1, &s));
        const auto svg = take(s);
        std::ofstream out(svg_file, std::ios::trunc);
        if (!out || !(out << svg)) throw Failure{PP_IO, "cannot write " + svg_file};
      }
      emit(common, fmt == "text" ? ascii : single_value("ascii", ascii, fmt));
      return kOk;
    }

    if (series->parsed()) {
      char* s = nullptr;
      check(pp_gf_coefficients_json(series_tau.c_str(), series_r, series_n, &s));
      const auto j = ordered_json::parse(take(s));
      if (fmt == "json") {
        emit(common, j.dump(2) + "\n");
      } else {
        std::ostringstream out;
        if (fmt == "csv") out << "n,coefficient\n";
        else if (j["conjecture"].get<bool>()) out << "# CONJECTURE\n";
        std::size_t n = 0;
        for (const auto& c : j["coefficients"]) out << n++ << (fmt == "csv" ? "," : " ") << c.get<std::string>() << "\n";
        emit(common, out.str());
      }
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << pp_status_name(f.status) << "): " << f.message << "\n";
    if (exit_code(f.status) == kUsage) std::cerr << "Run with --help for usage.\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
