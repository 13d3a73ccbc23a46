#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathperm/bijections.hpp"
#include "pathperm/series.hpp"

namespace pathperm {

struct EnumerateOptions {
  unsigned workers = 1;
  std::size_t limit = 10;    // largest n accepted without allow_large
  bool allow_large = false;  // lifts the limit up to kHardLimit
};

inline constexpr std::size_t kHardLimit = 12;

/// Occurrence-count histogram over S_n; counts[r] = #{rho : r occurrences}.
struct DistributionTable {
  std::size_t n = 0;
  Permutation tau;
  std::vector<std::uint64_t> counts;  // trailing zeros trimmed
  std::uint64_t total = 0;            // n!

  std::uint64_t count(std::size_t r) const { return r < counts.size() ? counts[r] : 0; }
  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

/// Throws ResourceGuard when n exceeds the configured limit.
void check_enumeration_limit(std::size_t n, const EnumerateOptions& options);

DistributionTable brute_distribution(std::size_t n, const Permutation& tau,
                                     const EnumerateOptions& options = {});
DistributionTable brute_distribution(std::size_t n, Pattern tau,
                                     const EnumerateOptions& options = {});

/// Members of S_n with exactly r occurrences, in lexicographic order. The
/// visitor returns false to stop early.
void enumerate_class(std::size_t n, const Permutation& tau, std::size_t r,
                     const std::function<bool(const Permutation&)>& visit,
                     const EnumerateOptions& options = {});
std::vector<Permutation> enumerate_class(std::size_t n, const Permutation& tau,
                                         std::size_t r,
                                         const EnumerateOptions& options = {});

struct TauBaseCatalog {
  Pattern tau = Pattern::P312;
  int r = 0;
  std::vector<Permutation> bases;  // by length, then lexicographic
};

/// Searches S_k for 3 <= k <= 3r. Needs 0 <= r <= 2 (UnsupportedInput
/// otherwise; r = 3 would mean scanning S_9, which is allowed with
/// allow_large).
TauBaseCatalog enumerate_tau_bases(Pattern tau, int r, const EnumerateOptions& options = {});

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failure, empty when passing
};

struct AuditReport {
  std::size_t n = 0;
  Pattern tau = Pattern::P312;
  std::vector<AuditCheck> checks;
  bool pass() const;
};

AuditReport audit_bijections(std::size_t n, Pattern tau, const EnumerateOptions& options = {});

struct FormulaRow {
  Pattern tau = Pattern::P312;
  int r = 0;
  std::size_t n = 0;
  BigInteger brute;
  BigInteger expected;
  bool conjecture = false;
  bool pass = false;
};

struct FormulaReport {
  std::vector<FormulaRow> rows;
  bool pass() const;
  /// First failing row, if any.
  std::optional<FormulaRow> first_failure() const;
};

/// Brute counts vs the closed counting formulas, r = 0, 1, 2, both patterns.
FormulaReport verify_formulas(std::size_t n_max, const EnumerateOptions& options = {});
/// Brute counts vs gf coefficients for the conjectured r = 3, 4 of (3,2,1).
FormulaReport verify_conjectures(std::size_t n_max, const EnumerateOptions& options = {});

/// On-disk table cache: <dir>/<tau>/<n>.json with a checksum over the
/// content; a mismatching file is refused with CacheCorrupt.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  std::filesystem::path file_for(std::size_t n, const Permutation& tau) const;
  std::optional<DistributionTable> load(std::size_t n, const Permutation& tau) const;
  void store(const DistributionTable& table) const;

  static std::string serialize(const DistributionTable& table);
  static DistributionTable deserialize(const std::string& text);

 private:
  std::filesystem::path dir_;
};

/// brute_distribution through an optional cache (stores fresh results).
DistributionTable cached_distribution(std::size_t n, const Permutation& tau,
                                      const EnumerateOptions& options,
                                      const TableCache* cache);

std::string compact_name(const Permutation& tau);  // "312"; "10,2,..." if any entry > 9

}  // namespace pathperm
