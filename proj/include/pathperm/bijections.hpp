#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "pathperm/lattice_path.hpp"
#include "pathperm/permutation.hpp"

namespace pathperm {

/// The two essentially different length-3 patterns.
enum class Pattern { P312, P321 };

const Permutation& as_permutation(Pattern p);
/// Accepts "312"/"321" and "3,1,2"/"3,2,1"; anything else is UnsupportedPattern.
Pattern parse_pattern(std::string_view text);
const char* pattern_name(Pattern p);  // "312" or "321"

/// Translates a height vector into a path: before the i-th down-step rise to
/// h_i + 1 with up-steps or fall to it with down-jumps.
LatticePath translate_heights(const HeightVector& heights);

/// Jump-free Dyck path of the left-to-right maxima configuration, built from
/// the per-entry heights (maximum m: smaller entries to its right; entry k
/// after it: h_m - (k - m)).
LatticePath psi_avoiding(const Permutation& rho);
/// Same map read off the staircase below-and-right of the maxima: one column
/// per entry, climbing to the running maximum before each down-step.
LatticePath psi_avoiding_staircase(const Permutation& rho);

LatticePath psi312(const Permutation& rho);
LatticePath psi321(const Permutation& rho);
LatticePath psi(const Permutation& rho, Pattern tau);

/// Inverse fills of a jump-free Dyck path. Paths with jumps are rejected with
/// UnsupportedInput, invalid paths with InvalidInput.
Permutation decode_321_avoiding(const LatticePath& path);
Permutation decode_312_avoiding(const LatticePath& path);

/// Inverse of psi312 on its image; NotInImage for anything else.
Permutation decode_psi312(const LatticePath& path);

/// Preimage of psi321 by exhaustive search over S_n (no direct inverse is
/// known); nullopt if the path is not in the image.
std::optional<Permutation> search_psi321_preimage(const LatticePath& path);

using Triple = std::array<int, 3>;  // entry values, left to right

struct MaximumRecord {
  std::size_t position = 0;  // 1-based position in rho
  int value = 0;
  int height = 0;            // encoder height h of the maximum
  /// Non-maximum up-steps (312) or non-maximum down-steps (321) strictly
  /// between this maximum and the jump.
  int between = 0;
};

struct OccurrencePrediction {
  std::uint64_t base = 0;          // d * l
  std::uint64_t before_downs = 0;  // m * d * l, (3,1,2) only
  std::uint64_t maxima_sum = 0;    // earlier-maxima (3,1,2) / all-maxima (3,2,1) sum
  std::uint64_t total = 0;
  /// Explicit triples named by the clauses; a set, so overlapping clauses
  /// are counted once here while `total` follows the closed counts.
  std::set<Triple> triples;
};

struct JumpContext {
  Jump jump;
  std::size_t l = 0;  // down-steps immediately after the jump
  std::size_t m = 0;  // down-steps immediately before the jump
  std::size_t preceding_maximum = 0;  // 1-based position
  bool run_starts_at_maximum = false;
  /// Entries to the right of the jump that cause it (d of them).
  std::vector<std::size_t> causing;
  std::size_t causing_candidates = 0;
  std::vector<MaximumRecord> maxima_before;
  bool first = false;
  OccurrencePrediction prediction;
};

std::vector<JumpContext> analyze_jumps(const Permutation& rho, Pattern tau);

/// Jumps in psi_tau(rho) never outnumber occurrences, and vanish exactly for
/// avoiders.
bool check_jumpsum(const Permutation& rho, Pattern tau);

/// Exactly one jump, of depth 1, inside the segment up, up, down, jump, down, up.
bool has_single_occurrence_shape_312(const LatticePath& path);

}  // namespace pathperm
