#include "pathperm/pathperm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "pathperm/enumerate.hpp"
#include "pathperm/error.hpp"
#include "pathperm/generating_functions.hpp"

using nlohmann::ordered_json;
using namespace pathperm;

struct pp_perm {
  Permutation value;
};
struct pp_path {
  LatticePath value;
};
struct pp_table {
  DistributionTable value;
};

namespace {

thread_local std::string last_error;

pp_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return PP_INVALID_INPUT;
    case ErrorCode::UnsupportedPattern: return PP_UNSUPPORTED_PATTERN;
    case ErrorCode::UnsupportedInput: return PP_UNSUPPORTED_INPUT;
    case ErrorCode::NotInImage: return PP_NOT_IN_IMAGE;
    case ErrorCode::ResourceGuard: return PP_RESOURCE_GUARD;
    case ErrorCode::CacheCorrupt: return PP_CACHE_CORRUPT;
    case ErrorCode::Io: return PP_IO;
  }
  return PP_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread-local message.
template <class F>
pp_status guarded(F&& f) {
  try {
    f();
    return PP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PP_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PP_INTERNAL;
  }
}

template <class... Ts>
bool any_null(Ts*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

pp_status null_argument(const char* fn) {
  last_error = std::string(fn) + ": null argument";
  return PP_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Permutation general_pattern(const char* text) {
  Permutation tau;
  try {
    tau = Permutation::parse(text);
  } catch (const Error&) {
    tau = Permutation();
  }
  if (tau.size() != 3) {
    throw Error(ErrorCode::UnsupportedPattern,
                std::string("pattern must have length 3, got '") + text + "'");
  }
  return tau;
}

EnumerateOptions to_options(const pp_options* options) {
  EnumerateOptions out;
  if (!options) return out;
  out.workers = options->workers ? options->workers : 1;
  out.limit = options->limit;
  out.allow_large = options->allow_large != 0;
  return out;
}

std::string dec(std::uint64_t v) { return std::to_string(v); }

ordered_json table_json(const DistributionTable& t) {
  ordered_json j;
  j["n"] = t.n;
  j["tau"] = compact_name(t.tau);
  ordered_json counts = ordered_json::object();
  for (std::size_t r = 0; r < t.counts.size(); ++r) counts[std::to_string(r)] = dec(t.counts[r]);
  j["counts"] = counts;
  j["total"] = dec(t.total);
  return j;
}

ordered_json formula_json(const FormulaReport& report, const char* kind) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"tau", pattern_name(row.tau)},
                    {"r", row.r},
                    {"n", row.n},
                    {"brute", row.brute.get_str()},
                    {"expected", row.expected.get_str()},
                    {"conjecture", row.conjecture},
                    {"pass", row.pass}});
  }
  ordered_json j;
  j["kind"] = kind;
  j["pass"] = report.pass();
  j["rows"] = rows;
  return j;
}

ordered_json rationals(const std::vector<BigRational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(to_decimal(q));
  return out;
}

void set_pass(int* pass, bool value) {
  if (pass) *pass = value ? 1 : 0;
}

}  // namespace

extern "C" {

const char* pp_version(void) { return "1.0.0"; }

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_INVALID_INPUT: return "invalid-input";
    case PP_UNSUPPORTED_PATTERN: return "unsupported-pattern";
    case PP_UNSUPPORTED_INPUT: return "unsupported-input";
    case PP_NOT_IN_IMAGE: return "not-in-image";
    case PP_RESOURCE_GUARD: return "resource-guard";
    case PP_CACHE_CORRUPT: return "cache-corrupt";
    case PP_IO: return "io";
    case PP_NULL_ARGUMENT: return "null-argument";
    case PP_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* pp_last_error(void) { return last_error.c_str(); }

void pp_string_free(char* s) { std::free(s); }

void pp_options_default(pp_options* options) {
  if (!options) return;
  options->workers = 1;
  options->limit = 10;
  options->allow_large = 0;
  options->cache_dir = nullptr;
}

pp_status pp_perm_parse(const char* text, pp_perm** out) {
  if (any_null(text, out)) return null_argument("pp_perm_parse");
  return guarded([&] { *out = new pp_perm{Permutation::parse(text)}; });
}

pp_status pp_perm_from_values(const int* values, size_t n, pp_perm** out) {
  if (!out || (n > 0 && !values)) return null_argument("pp_perm_from_values");
  return guarded([&] { *out = new pp_perm{Permutation(std::vector<int>(values, values + n))}; });
}

void pp_perm_free(pp_perm* p) { delete p; }

size_t pp_perm_size(const pp_perm* p) { return p ? p->value.size() : 0; }

int pp_perm_at(const pp_perm* p, size_t i) {
  if (!p || i == 0 || i > p->value.size()) return 0;
  return p->value.at(i);
}

pp_status pp_perm_to_string(const pp_perm* p, char** out) {
  if (any_null(p, out)) return null_argument("pp_perm_to_string");
  return guarded([&] { *out = dup(p->value.to_string()); });
}

pp_status pp_count_occurrences(const pp_perm* p, const char* pattern, uint64_t* out) {
  if (any_null(p, pattern, out)) return null_argument("pp_count_occurrences");
  return guarded([&] { *out = count_occurrences_fast(p->value, general_pattern(pattern)); });
}

pp_status pp_tau_base(const pp_perm* p, const char* pattern, pp_perm** out) {
  if (any_null(p, pattern, out)) return null_argument("pp_tau_base");
  return guarded([&] { *out = new pp_perm{tau_base(p->value, general_pattern(pattern))}; });
}

pp_status pp_heights(const pp_perm* p, const char* pattern, int* out) {
  if (!p || !pattern || (!out && p->value.size() > 0)) return null_argument("pp_heights");
  return guarded([&] {
    const auto h = parse_pattern(pattern) == Pattern::P312 ? heights_312(p->value)
                                                           : heights_321(p->value);
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = h.heights[i];
  });
}

pp_status pp_path_parse(const char* text, pp_path** out) {
  if (any_null(text, out)) return null_argument("pp_path_parse");
  return guarded([&] { *out = new pp_path{LatticePath::parse(text)}; });
}

void pp_path_free(pp_path* path) { delete path; }

pp_status pp_path_to_string(const pp_path* path, char** out) {
  if (any_null(path, out)) return null_argument("pp_path_to_string");
  return guarded([&] { *out = dup(path->value.to_string()); });
}

pp_status pp_path_classify(const pp_path* path, int* kind, char** reason) {
  if (any_null(path, kind)) return null_argument("pp_path_classify");
  return guarded([&] {
    const auto cls = validate(path->value);
    *kind = static_cast<int>(cls.kind);
    if (reason) *reason = cls.reason.empty() ? nullptr : dup(cls.reason);
  });
}

pp_status pp_path_render(const pp_path* path, int svg, char** out) {
  if (any_null(path, out)) return null_argument("pp_path_render");
  return guarded([&] { *out = dup(svg ? render_svg(path->value) : render_ascii(path->value)); });
}

pp_status pp_count_paths(size_t n, size_t s, char** decimal) {
  if (!decimal) return null_argument("pp_count_paths");
  return guarded([&] { *decimal = dup(count_paths(n, s).get_str()); });
}

pp_status pp_map(const pp_perm* p, const char* mode, pp_path** out) {
  if (any_null(p, mode, out)) return null_argument("pp_map");
  return guarded([&] {
    const std::string m(mode);
    if (m == "avoiding") {
      *out = new pp_path{psi_avoiding(p->value)};
    } else {
      *out = new pp_path{psi(p->value, parse_pattern(m))};
    }
  });
}

pp_status pp_decode(const pp_path* path, const char* mode, pp_perm** out) {
  if (any_null(path, mode, out)) return null_argument("pp_decode");
  return guarded([&] {
    const std::string m(mode);
    if (m == "312avoid") {
      *out = new pp_perm{decode_312_avoiding(path->value)};
    } else if (m == "321avoid") {
      *out = new pp_perm{decode_321_avoiding(path->value)};
    } else if (m == "psi312") {
      *out = new pp_perm{decode_psi312(path->value)};
    } else if (m == "psi321") {
      auto found = search_psi321_preimage(path->value);
      if (!found) throw Error(ErrorCode::NotInImage, "path is not in the image of psi321");
      *out = new pp_perm{*found};
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown decode mode '" + m + "'");
    }
  });
}

pp_status pp_analyze_jumps_json(const pp_perm* p, const char* pattern, char** json) {
  if (any_null(p, pattern, json)) return null_argument("pp_analyze_jumps_json");
  return guarded([&] {
    const auto tau = parse_pattern(pattern);
    ordered_json list = ordered_json::array();
    for (const auto& ctx : analyze_jumps(p->value, tau)) {
      ordered_json maxima = ordered_json::array();
      for (const auto& m : ctx.maxima_before) {
        maxima.push_back({{"position", m.position},
                          {"value", m.value},
                          {"height", m.height},
                          {"between", m.between}});
      }
      ordered_json triples = ordered_json::array();
      for (const auto& t : ctx.prediction.triples) triples.push_back({t[0], t[1], t[2]});
      list.push_back({{"position", ctx.jump.position},
                      {"depth", ctx.jump.depth},
                      {"first", ctx.first},
                      {"l", ctx.l},
                      {"m", ctx.m},
                      {"preceding_maximum", ctx.preceding_maximum},
                      {"causing", ctx.causing},
                      {"maxima_before", maxima},
                      {"predicted_total", ctx.prediction.total},
                      {"predicted_triples", triples}});
    }
    ordered_json j;
    j["permutation"] = p->value.to_string();
    j["tau"] = pattern_name(tau);
    j["path"] = psi(p->value, tau).to_string();
    j["occurrences"] = count_occurrences_fast(p->value, as_permutation(tau));
    j["jumps"] = list;
    *json = dup(j.dump());
  });
}

pp_status pp_table_compute(size_t n, const char* pattern, const pp_options* options,
                           pp_table** out) {
  if (any_null(pattern, out)) return null_argument("pp_table_compute");
  return guarded([&] {
    const auto tau = general_pattern(pattern);
    const auto opts = to_options(options);
    if (options && options->cache_dir && *options->cache_dir) {
      const TableCache cache(options->cache_dir);
      *out = new pp_table{cached_distribution(n, tau, opts, &cache)};
    } else {
      *out = new pp_table{brute_distribution(n, tau, opts)};
    }
  });
}

void pp_table_free(pp_table* table) { delete table; }

size_t pp_table_n(const pp_table* table) { return table ? table->value.n : 0; }

size_t pp_table_width(const pp_table* table) { return table ? table->value.counts.size() : 0; }

uint64_t pp_table_count(const pp_table* table, size_t r) { return table ? table->value.count(r) : 0; }

uint64_t pp_table_total(const pp_table* table) { return table ? table->value.total : 0; }

pp_status pp_table_json(const pp_table* table, char** json) {
  if (any_null(table, json)) return null_argument("pp_table_json");
  return guarded([&] { *json = dup(table_json(table->value).dump()); });
}

pp_status pp_class_json(size_t n, const char* pattern, size_t r, const pp_options* options,
                        char** json) {
  if (any_null(pattern, json)) return null_argument("pp_class_json");
  return guarded([&] {
    ordered_json members = ordered_json::array();
    enumerate_class(
        n, general_pattern(pattern), r,
        [&](const Permutation& p) {
          members.push_back(p.to_string());
          return true;
        },
        to_options(options));
    ordered_json j;
    j["n"] = n;
    j["tau"] = compact_name(general_pattern(pattern));
    j["r"] = r;
    j["members"] = members;
    *json = dup(j.dump());
  });
}

pp_status pp_bases_json(const char* pattern, int r, const pp_options* options, char** json) {
  if (any_null(pattern, json)) return null_argument("pp_bases_json");
  return guarded([&] {
    const auto catalog = enumerate_tau_bases(parse_pattern(pattern), r, to_options(options));
    ordered_json bases = ordered_json::array();
    for (const auto& b : catalog.bases) bases.push_back(b.to_string());
    ordered_json j;
    j["tau"] = pattern_name(catalog.tau);
    j["r"] = catalog.r;
    j["bases"] = bases;
    *json = dup(j.dump());
  });
}

pp_status pp_audit_json(size_t n, const char* pattern, const pp_options* options, char** json,
                        int* pass) {
  if (any_null(pattern, json)) return null_argument("pp_audit_json");
  return guarded([&] {
    const auto report = audit_bijections(n, parse_pattern(pattern), to_options(options));
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"checked", c.checked},
                        {"counterexample", c.counterexample}});
    }
    ordered_json j;
    j["kind"] = "audit";
    j["n"] = n;
    j["tau"] = pattern_name(report.tau);
    j["pass"] = report.pass();
    j["checks"] = checks;
    set_pass(pass, report.pass());
    *json = dup(j.dump());
  });
}

pp_status pp_verify_formulas_json(size_t n_max, const pp_options* options, char** json, int* pass) {
  if (!json) return null_argument("pp_verify_formulas_json");
  return guarded([&] {
    const auto report = verify_formulas(n_max, to_options(options));
    set_pass(pass, report.pass());
    *json = dup(formula_json(report, "formulas").dump());
  });
}

pp_status pp_verify_conjectures_json(size_t n_max, const pp_options* options, char** json,
                                     int* pass) {
  if (!json) return null_argument("pp_verify_conjectures_json");
  return guarded([&] {
    const auto report = verify_conjectures(n_max, to_options(options));
    set_pass(pass, report.pass());
    *json = dup(formula_json(report, "conjectures").dump());
  });
}

pp_status pp_verify_assemblies_json(size_t order, char** json, int* pass) {
  if (!json) return null_argument("pp_verify_assemblies_json");
  return guarded([&] {
    if (order < 1) throw Error(ErrorCode::InvalidInput, "order must be at least 1");
    const auto report = check_assemblies(order);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json row{{"name", c.name}, {"pass", c.pass}};
      row["first_mismatch"] = c.first_mismatch ? ordered_json(*c.first_mismatch) : ordered_json(nullptr);
      checks.push_back(row);
    }
    ordered_json j;
    j["kind"] = "assemblies";
    j["order"] = order;
    j["pass"] = report.all_pass();
    j["checks"] = checks;
    set_pass(pass, report.all_pass());
    *json = dup(j.dump());
  });
}

pp_status pp_verify_general_form_json(size_t order, char** json, int* pass) {
  if (!json) return null_argument("pp_verify_general_form_json");
  return guarded([&] {
    if (order < 1) throw Error(ErrorCode::InvalidInput, "order must be at least 1");
    ordered_json results = ordered_json::array();
    bool all = true;
    const std::pair<Pattern, int> cases[] = {{Pattern::P312, 1}, {Pattern::P312, 2},
                                             {Pattern::P321, 1}, {Pattern::P321, 2},
                                             {Pattern::P321, 3}, {Pattern::P321, 4}};
    for (const auto& [tau, r] : cases) {
      const auto rep = check_general_form(tau, r, order);
      all = all && rep.pass;
      results.push_back({{"tau", pattern_name(tau)},
                         {"r", r},
                         {"conjecture", gf_is_conjecture(tau, r)},
                         {"pass", rep.pass},
                         {"p", rationals(rep.p)},
                         {"q", rationals(rep.q)},
                         {"p_degree", rep.p_degree},
                         {"q_degree", rep.q_degree},
                         {"checked_equations", rep.checked_equations},
                         {"denominator_exact", rep.denominator_exact},
                         {"detail", rep.detail}});
    }
    ordered_json j;
    j["kind"] = "general-form";
    j["order"] = order;
    j["pass"] = all;
    j["results"] = results;
    set_pass(pass, all);
    *json = dup(j.dump());
  });
}

pp_status pp_gf_coefficients_json(const char* pattern, int r, size_t n_max, char** json) {
  if (any_null(pattern, json)) return null_argument("pp_gf_coefficients_json");
  return guarded([&] {
    const auto tau = parse_pattern(pattern);
    const auto series = gf(tau, r, 2 * n_max + 1);
    ordered_json coeffs = ordered_json::array();
    for (std::size_t n = 0; n <= n_max; ++n) coeffs.push_back(to_decimal(series.x_coeff(n)));
    ordered_json j;
    j["tau"] = pattern_name(tau);
    j["r"] = r;
    j["conjecture"] = gf_is_conjecture(tau, r);
    j["coefficients"] = coeffs;
    *json = dup(j.dump());
  });
}

pp_status pp_closed_form_count(const char* pattern, int r, size_t n, char** decimal) {
  if (any_null(pattern, decimal)) return null_argument("pp_closed_form_count");
  return guarded([&] { *decimal = dup(count_closed_form(parse_pattern(pattern), r, n).get_str()); });
}

}  // extern "C"
