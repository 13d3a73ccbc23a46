#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathperm {

/// A permutation of {1, ..., n}. Positions and values are 1-based in the
/// public accessors; the empty permutation (n = 0) is valid.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);
  /// Parses "4,3,5,1,2"; the compact pattern shorthand "312" is accepted for
  /// single-digit entries without commas.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  /// Value at 1-based position i.
  int at(std::size_t i) const { return values_.at(i - 1); }
  std::span<const int> values() const noexcept { return values_; }

  std::string to_string() const;  // "4,3,5,1,2"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// A list of nonnegative per-entry heights h_1..h_n.
struct HeightVector {
  std::vector<int> heights;

  std::size_t size() const noexcept { return heights.size(); }
  int at(std::size_t i) const { return heights.at(i - 1); }
  friend bool operator==(const HeightVector&, const HeightVector&) = default;
};

/// All occurrences of a pattern: strictly increasing 1-based index tuples in
/// lexicographic order.
struct OccurrenceSet {
  Permutation pattern;
  std::vector<std::vector<std::size_t>> positions;

  std::size_t count() const noexcept { return positions.size(); }
};

Permutation reduce(std::span<const int> subword);

OccurrenceSet find_occurrences(const Permutation& rho, const Permutation& tau);
std::uint64_t count_occurrences(const Permutation& rho, const Permutation& tau);

/// O(n^2) counter for length-3 patterns; throws UnsupportedPattern otherwise.
std::uint64_t count_occurrences_fast(const Permutation& rho,
                                     const Permutation& tau);

/// Number of occurrences of the length-3 pattern `tau` whose last entry is the
/// entry at 0-based index `last` of `values`. Only values[0..last] are read,
/// so this works on prefixes during enumeration. Requires values <= 64.
std::uint32_t occurrences_ending_at(std::span<const int> values,
                                    std::size_t last, const Permutation& tau);

std::vector<std::size_t> left_to_right_maxima(const Permutation& rho);
bool is_left_to_right_maximum(const Permutation& rho, std::size_t i);

HeightVector heights_312(const Permutation& rho);
HeightVector heights_321(const Permutation& rho);

Permutation tau_base(const Permutation& rho, const Permutation& tau);

/// Quarter turn counter-clockwise of the permutation graph.
Permutation rotate_quarter(const Permutation& rho);
/// Reflection at the downwards-sloping diagonal.
Permutation reflect_anti_diag(const Permutation& rho);
/// Reflection at the upwards-sloping diagonal (the inverse permutation).
Permutation reflect_main_diag(const Permutation& rho);

inline const Permutation& pattern_312() {
  static const Permutation p{3, 1, 2};
  return p;
}
inline const Permutation& pattern_321() {
  static const Permutation p{3, 2, 1};
  return p;
}

}  // namespace pathperm
