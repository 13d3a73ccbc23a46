#include "pathperm/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pathperm/error.hpp"
#include "pathperm/generating_functions.hpp"

namespace pathperm {

namespace {

constexpr const char* kCacheVersion = "pathperm-table-1";

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Depth-first walk over S_n that keeps the running occurrence count of the
// prefix; each new entry adds the occurrences ending at it.
class Walker {
 public:
  Walker(std::size_t n, const Permutation& tau) : n_(n), tau_(tau), values_(n, 0) {}

  void place(std::size_t pos, int v) {
    values_[pos] = v;
    used_ |= std::uint64_t{1} << v;
  }
  void lift(std::size_t pos) {
    used_ &= ~(std::uint64_t{1} << values_[pos]);
    values_[pos] = 0;
  }
  bool used(int v) const { return (used_ >> v) & 1u; }
  std::uint64_t added(std::size_t pos) const {
    return pos < 2 ? 0 : occurrences_ending_at(values_, pos, tau_);
  }
  std::size_t n() const { return n_; }
  const std::vector<int>& values() const { return values_; }

  void histogram(std::size_t pos, std::uint64_t occ, std::vector<std::uint64_t>& hist) {
    if (pos == n_) {
      if (hist.size() <= occ) hist.resize(occ + 1, 0);
      ++hist[occ];
      return;
    }
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used(v)) continue;
      place(pos, v);
      histogram(pos + 1, occ + added(pos), hist);
      lift(pos);
    }
  }

  // false once the visitor asked to stop
  bool members(std::size_t pos, std::uint64_t occ, std::uint64_t r,
               const std::function<bool(const Permutation&)>& visit) {
    if (pos == n_) return occ != r || visit(Permutation(values_));
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used(v)) continue;
      place(pos, v);
      const auto next = occ + added(pos);
      // occurrences only accumulate, so an overshooting prefix is dead
      const bool go_on = next > r || members(pos + 1, next, r, visit);
      lift(pos);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  const Permutation& tau_;
  std::vector<int> values_;
  std::uint64_t used_ = 0;
};

std::vector<std::vector<int>> shard_prefixes(std::size_t n, std::size_t length) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<bool> taken(n + 1, false);
  const std::function<void()> rec = [&] {
    if (prefix.size() == length) {
      out.push_back(prefix);
      return;
    }
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      if (taken[static_cast<std::size_t>(v)]) continue;
      taken[static_cast<std::size_t>(v)] = true;
      prefix.push_back(v);
      rec();
      prefix.pop_back();
      taken[static_cast<std::size_t>(v)] = false;
    }
  };
  rec();
  return out;
}

void require_length3(const Permutation& tau) {
  if (tau.size() != 3) {
    throw Error(ErrorCode::UnsupportedPattern, "only length-3 patterns are supported");
  }
}

void trim(std::vector<std::uint64_t>& counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string checksum_payload(const DistributionTable& t) {
  std::ostringstream out;
  out << kCacheVersion << '|' << compact_name(t.tau) << '|' << t.n << '|';
  for (std::size_t r = 0; r < t.counts.size(); ++r) out << (r ? "," : "") << t.counts[r];
  return out.str();
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << v;
  return out.str();
}

void dyck_paths(std::size_t n, const std::function<void(const LatticePath&)>& visit) {
  std::vector<Step> steps;
  const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t ups, std::size_t downs) {
    if (downs == n) {
      visit(LatticePath(steps));
      return;
    }
    if (ups < n) {
      steps.push_back(Step::Up);
      rec(ups + 1, downs);
      steps.pop_back();
    }
    if (downs < ups) {
      steps.push_back(Step::Down);
      rec(ups, downs + 1);
      steps.pop_back();
    }
  };
  rec(0, 0);
}

std::string triple_string(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

std::string compact_name(const Permutation& tau) {
  const auto v = tau.values();
  const bool small = std::all_of(v.begin(), v.end(), [](int x) { return x <= 9; });
  if (!small) return tau.to_string();
  std::string out;
  for (int x : v) out.push_back(static_cast<char>('0' + x));
  return out;
}

void check_enumeration_limit(std::size_t n, const EnumerateOptions& options) {
  const auto limit = options.allow_large ? kHardLimit : options.limit;
  if (n > limit) {
    throw Error(ErrorCode::ResourceGuard,
                "n = " + std::to_string(n) + " exceeds the enumeration limit " +
                    std::to_string(limit) +
                    (options.allow_large || n > kHardLimit ? "" : " (pass allow-large to go up to 12)"));
  }
}

DistributionTable brute_distribution(std::size_t n, const Permutation& tau,
                                     const EnumerateOptions& options) {
  require_length3(tau);
  check_enumeration_limit(n, options);
  const unsigned workers = std::max(1u, options.workers);
  const std::size_t depth = std::min<std::size_t>(n, static_cast<std::size_t>(std::bit_width(workers - 1)));
  const auto prefixes = shard_prefixes(n, depth);

  std::vector<std::vector<std::uint64_t>> shards(prefixes.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t s = next++; s < prefixes.size(); s = next++) {
      Walker walker(n, tau);
      std::uint64_t occ = 0;
      for (std::size_t pos = 0; pos < prefixes[s].size(); ++pos) {
        walker.place(pos, prefixes[s][pos]);
        occ += walker.added(pos);
      }
      walker.histogram(prefixes[s].size(), occ, shards[s]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  DistributionTable table;
  table.n = n;
  table.tau = tau;
  for (const auto& hist : shards) {
    if (table.counts.size() < hist.size()) table.counts.resize(hist.size(), 0);
    for (std::size_t r = 0; r < hist.size(); ++r) table.counts[r] += hist[r];
  }
  trim(table.counts);
  for (auto c : table.counts) table.total += c;
  return table;
}

DistributionTable brute_distribution(std::size_t n, Pattern tau, const EnumerateOptions& options) {
  return brute_distribution(n, as_permutation(tau), options);
}

void enumerate_class(std::size_t n, const Permutation& tau, std::size_t r,
                     const std::function<bool(const Permutation&)>& visit,
                     const EnumerateOptions& options) {
  require_length3(tau);
  check_enumeration_limit(n, options);
  Walker walker(n, tau);
  walker.members(0, 0, r, visit);
}

std::vector<Permutation> enumerate_class(std::size_t n, const Permutation& tau, std::size_t r,
                                         const EnumerateOptions& options) {
  std::vector<Permutation> out;
  enumerate_class(
      n, tau, r,
      [&](const Permutation& p) {
        out.push_back(p);
        return true;
      },
      options);
  return out;
}

TauBaseCatalog enumerate_tau_bases(Pattern tau, int r, const EnumerateOptions& options) {
  const int max_r = options.allow_large ? 3 : 2;
  if (r < 0 || r > max_r) {
    throw Error(ErrorCode::UnsupportedInput,
                "tau-base search supports 0 <= r <= " + std::to_string(max_r));
  }
  TauBaseCatalog catalog;
  catalog.tau = tau;
  catalog.r = r;
  const auto& pattern = as_permutation(tau);
  EnumerateOptions wide = options;
  wide.allow_large = true;
  for (std::size_t k = 3; k <= static_cast<std::size_t>(3 * r); ++k) {
    enumerate_class(
        k, pattern, static_cast<std::size_t>(r),
        [&](const Permutation& mu) {
          if (tau_base(mu, pattern) == mu) catalog.bases.push_back(mu);
          return true;
        },
        wide);
  }
  return catalog;
}

bool AuditReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

AuditReport audit_bijections(std::size_t n, Pattern tau, const EnumerateOptions& options) {
  check_enumeration_limit(n, options);
  const auto& pattern = as_permutation(tau);
  const bool is312 = tau == Pattern::P312;

  AuditReport report;
  report.n = n;
  report.tau = tau;
  const auto named = [](std::string name) {
    AuditCheck check;
    check.name = std::move(name);
    return check;
  };
  auto injective = named("psi injective on S_n");
  auto jumpsum = named("jumps never exceed occurrences");
  auto avoid_iff = named("no jumps exactly for avoiders");
  auto image = named("avoider images are the C_n Dyck paths");
  auto staircase = named("height form of the avoider map = staircase form");
  auto roundtrip = named(is312 ? "decode_312_avoiding inverts the avoider map"
                             : "decode_321_avoiding inverts the avoider map");
  auto psi_inverse = named("decode_psi312 inverts psi312");
  auto predictions = named("one-jump predictions: triples found, totals exact for r <= 2");

  const auto fail = [](AuditCheck& check, const std::string& what) {
    if (check.pass) check.counterexample = what;
    check.pass = false;
  };

  std::map<LatticePath, Permutation> seen;
  std::set<LatticePath> avoider_images;
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<int>(i + 1);
  do {
    const Permutation rho(values);
    const auto path = psi(rho, tau);
    const auto occ = find_occurrences(rho, pattern);
    const auto js = jumps(path);

    ++injective.checked;
    if (auto [it, fresh] = seen.emplace(path, rho); !fresh) {
      fail(injective, rho.to_string() + " and " + it->second.to_string() + " -> " + path.to_string());
    }
    ++jumpsum.checked;
    if (!check_jumpsum(rho, tau)) fail(jumpsum, rho.to_string());
    ++avoid_iff.checked;
    if (js.empty() != (occ.count() == 0)) fail(avoid_iff, rho.to_string());
    if (occ.count() == 0) {
      ++image.checked;
      avoider_images.insert(path);
      if (validate(path).kind != PathClass::Dyck) fail(image, rho.to_string() + " -> " + path.to_string());
    }

    ++staircase.checked;
    const auto dyck = psi_avoiding(rho);
    if (dyck != psi_avoiding_staircase(rho)) fail(staircase, rho.to_string());
    if (occ.count() == 0) {
      ++roundtrip.checked;
      const auto back = is312 ? decode_312_avoiding(dyck) : decode_321_avoiding(dyck);
      if (back != rho) fail(roundtrip, rho.to_string() + " -> " + dyck.to_string() + " -> " + back.to_string());
    }

    if (is312) {
      ++psi_inverse.checked;
      const auto back = decode_psi312(path);
      if (back != rho) fail(psi_inverse, rho.to_string() + " -> " + back.to_string());
    }

    if (js.size() == 1) {
      ++predictions.checked;
      std::set<Triple> found;
      for (const auto& tuple : occ.positions) {
        found.insert({rho.at(tuple[0]), rho.at(tuple[1]), rho.at(tuple[2])});
      }
      const auto contexts = analyze_jumps(rho, tau);
      for (const auto& ctx : contexts) {
        for (const auto& t : ctx.prediction.triples) {
          if (!found.count(t)) fail(predictions, rho.to_string() + ": predicted " + triple_string(t) + " is no occurrence");
        }
      }
      if ((occ.count() == 1 || occ.count() == 2) && contexts.size() == 1 &&
          contexts[0].prediction.total != occ.count()) {
        fail(predictions, rho.to_string() + ": predicted total " + std::to_string(contexts[0].prediction.total) +
                        ", found " + std::to_string(occ.count()));
      }
    }
  } while (std::next_permutation(values.begin(), values.end()));

  if (mpz_class(static_cast<unsigned long>(avoider_images.size())) != count_paths(n, 0)) {
    fail(image, std::to_string(avoider_images.size()) + " distinct avoider images, expected " +
                    count_paths(n, 0).get_str());
  }
  // every Dyck path decodes to an avoider and maps back to itself
  dyck_paths(n, [&](const LatticePath& path) {
    ++roundtrip.checked;
    const auto rho = is312 ? decode_312_avoiding(path) : decode_321_avoiding(path);
    if (count_occurrences_fast(rho, pattern) != 0 || psi_avoiding(rho) != path) {
      fail(roundtrip, path.to_string() + " -> " + rho.to_string());
    }
  });

  report.checks = {injective, jumpsum, avoid_iff, image, staircase, roundtrip};
  if (is312) report.checks.push_back(psi_inverse);
  report.checks.push_back(predictions);
  return report;
}

bool FormulaReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const FormulaRow& r) { return r.pass; });
}

std::optional<FormulaRow> FormulaReport::first_failure() const {
  for (const auto& row : rows) {
    if (!row.pass) return row;
  }
  return std::nullopt;
}

FormulaReport verify_formulas(std::size_t n_max, const EnumerateOptions& options) {
  check_enumeration_limit(n_max, options);
  FormulaReport report;
  for (auto tau : {Pattern::P312, Pattern::P321}) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto table = brute_distribution(n, tau, options);
      for (int r = 0; r <= 2; ++r) {
        FormulaRow row;
        row.tau = tau;
        row.r = r;
        row.n = n;
        row.brute = BigInteger(std::to_string(table.count(static_cast<std::size_t>(r))));
        row.expected = count_closed_form(tau, r, n);
        row.pass = row.brute == row.expected;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

FormulaReport verify_conjectures(std::size_t n_max, const EnumerateOptions& options) {
  check_enumeration_limit(n_max, options);
  FormulaReport report;
  const std::size_t order = 2 * n_max + 2;
  const auto g3 = gf(Pattern::P321, 3, order);
  const auto g4 = gf(Pattern::P321, 4, order);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto table = brute_distribution(n, Pattern::P321, options);
    for (int r = 3; r <= 4; ++r) {
      const auto& coeff = (r == 3 ? g3 : g4).x_coeff(n);
      FormulaRow row;
      row.tau = Pattern::P321;
      row.r = r;
      row.n = n;
      row.conjecture = true;
      row.brute = BigInteger(std::to_string(table.count(static_cast<std::size_t>(r))));
      row.pass = coeff.get_den() == 1;
      row.expected = coeff.get_num();
      row.pass = row.pass && row.brute == row.expected;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::file_for(std::size_t n, const Permutation& tau) const {
  return dir_ / compact_name(tau) / (std::to_string(n) + ".json");
}

std::string TableCache::serialize(const DistributionTable& table) {
  nlohmann::ordered_json j;
  j["n"] = table.n;
  j["tau"] = compact_name(table.tau);
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < table.counts.size(); ++r) {
    counts[std::to_string(r)] = std::to_string(table.counts[r]);
  }
  j["counts"] = counts;
  j["total"] = std::to_string(table.total);
  j["version"] = kCacheVersion;
  j["checksum"] = hex64(fnv1a(checksum_payload(table)));
  return j.dump(2) + "\n";
}

DistributionTable TableCache::deserialize(const std::string& text) {
  const auto corrupt = [](const std::string& why) {
    return Error(ErrorCode::CacheCorrupt, "cache entry refused: " + why);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw corrupt(e.what());
  }
  DistributionTable table;
  try {
    if (j.at("version").get<std::string>() != kCacheVersion) throw corrupt("version mismatch");
    table.n = j.at("n").get<std::size_t>();
    const auto tau_text = j.at("tau").get<std::string>();
    table.tau = Permutation::parse(tau_text);
    const auto& counts = j.at("counts");
    table.counts.assign(counts.size(), 0);
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      const auto r = std::stoull(it.key());
      if (r >= table.counts.size()) throw corrupt("count index out of range");
      table.counts[r] = std::stoull(it.value().get<std::string>());
    }
    table.total = std::stoull(j.at("total").get<std::string>());
    if (j.at("checksum").get<std::string>() != hex64(fnv1a(checksum_payload(table)))) {
      throw corrupt("checksum mismatch");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw corrupt(e.what());
  }
  std::uint64_t sum = 0;
  for (auto c : table.counts) sum += c;
  if (sum != table.total || table.total != factorial(table.n)) throw corrupt("counts do not sum to n!");
  return table;
}

std::optional<DistributionTable> TableCache::load(std::size_t n, const Permutation& tau) const {
  const auto file = file_for(n, tau);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto table = deserialize(buffer.str());
  if (table.n != n || table.tau != tau) {
    throw Error(ErrorCode::CacheCorrupt, "cache entry " + file.string() + " holds a different table");
  }
  return table;
}

void TableCache::store(const DistributionTable& table) const {
  const auto file = file_for(table.n, table.tau);
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + file.parent_path().string() + ": " + ec.message());
  // write-then-rename so readers never see a half-written entry
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
    out << serialize(table);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp + ": " + ec.message());
}

DistributionTable cached_distribution(std::size_t n, const Permutation& tau,
                                      const EnumerateOptions& options, const TableCache* cache) {
  if (cache) {
    if (auto hit = cache->load(n, tau)) return *hit;
  }
  auto table = brute_distribution(n, tau, options);
  if (cache) cache->store(table);
  return table;
}

}  // namespace pathperm
