#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pathperm {

enum class Step : char { Up = 'U', Down = 'D', JumpDown = 'J' };

/// A lattice path of up-steps (1,1), down-steps (1,-1) and down-jumps (0,-1),
/// stored as its step sequence. Construction does not validate; use
/// validate() for the Dyck conditions.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses the "UUDJD..." literal; any other character is rejected.
  static LatticePath parse(std::string_view text);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t down_steps() const noexcept;  // n
  std::size_t jump_steps() const noexcept;  // s
  std::size_t up_steps() const noexcept;

  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::vector<Step> steps_;
};

struct PathClass {
  enum Kind { Dyck, DyckWithJumps, Invalid } kind = Invalid;
  std::string reason;     // empty unless Invalid
  std::size_t prefix = 0; // steps consumed when the violation was seen
};

PathClass validate(const LatticePath& path);

struct DownStepInfo {
  std::size_t index = 0;  // 1-based among down-steps
  int height = 0;
  /// Down-step index of the nearest peak (up-step immediately followed by a
  /// down-step) weakly to the left, if any.
  std::optional<std::size_t> preceding_peak;
};

/// Throws InvalidInput on an invalid path.
std::vector<DownStepInfo> down_step_heights(const LatticePath& path);

struct Jump {
  std::size_t position = 0;  // down-steps before the run
  std::size_t depth = 0;
  std::size_t step_index = 0;  // 0-based index of the first J in the steps
};

std::vector<Jump> jumps(const LatticePath& path);

/// True when every jump run is immediately preceded and followed by a
/// down-step, as in every image of the jump encoders.
bool is_psi_shaped(const LatticePath& path);

/// |D_{n,s}| by dynamic programming over (ups, downs, jumps) left.
mpz_class count_paths(std::size_t n, std::size_t s);

/// Paths of up/down steps (no jumps) from height `from` to height `to` with
/// `downs` down-steps that never go below the axis.
mpz_class count_partial_paths(std::size_t from, std::size_t to, std::size_t downs);

/// Exponent e of the weight t^e = x^(e/2): one per up- and down-step.
std::size_t weight_exponent(const LatticePath& path);

std::string render_ascii(const LatticePath& path);
std::string render_svg(const LatticePath& path, int cell = 20);

}  // namespace pathperm
