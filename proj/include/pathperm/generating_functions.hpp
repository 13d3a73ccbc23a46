#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathperm/bijections.hpp"
#include "pathperm/series.hpp"

namespace pathperm {

/// Default truncation order in t (40 coefficients in x).
inline constexpr std::size_t kDefaultOrder = 80;

/// Catalan series c = (1 - sqrt(1 - 4x)) / (2x).
TruncatedSeries catalan_series(std::size_t order);
/// sqrt(1 - 4x) as a t-series.
TruncatedSeries sqrt_one_minus_4x(std::size_t order);

bool gf_known(Pattern tau, int r);
bool gf_is_conjecture(Pattern tau, int r);

/// Generating function sum_n s_n(tau, r) x^n from its closed form in x and
/// sqrt(1 - 4x). Supports r = 0, 1, 2 for both patterns and the conjectured
/// r = 3, 4 for (3,2,1); anything else is UnsupportedInput.
TruncatedSeries gf(Pattern tau, int r, std::size_t order = kDefaultOrder);

/// s_n(tau, r) from the closed counting formulas (r = 0, 1, 2), with the
/// conventions for n = 0, 1.
BigInteger count_closed_form(Pattern tau, int r, std::size_t n);

/// Non-negative paths climbing from height 0 to height l: c^(l+1) x^(l/2).
TruncatedSeries climb_segment(std::size_t l, std::size_t order);
/// Non-negative paths from height k to height l, summed over the minimal
/// height reached. Symmetric in (k, l).
TruncatedSeries c_k_l(std::size_t k, std::size_t l, std::size_t order);
/// ((c^2 x)^(k+1) - 1) c^(l-k+1) x^((l-k)/2) / (c^2 x - 1), for l >= k.
TruncatedSeries c_k_l_closed(std::size_t k, std::size_t l, std::size_t order);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::optional<std::size_t> first_mismatch;  // t-exponent
};

struct AssemblyReport {
  std::size_t order = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Verifies the segment sums, the one-occurrence assemblies and the
/// two-occurrence weighted sums against each other and against gf().
AssemblyReport check_assemblies(std::size_t order = kDefaultOrder);

struct GeneralFormReport {
  Pattern tau = Pattern::P321;
  int r = 0;
  std::size_t order = 0;
  bool pass = false;
  /// G = P + sqrt(1-4x) Q with G = 2 x^(2r+1) F for (3,2,1) and
  /// G = F (1-4x)^((2r-1)/2) for (3,1,2). Coefficients indexed by power of x.
  std::vector<BigRational> p, q;
  int p_degree = -1, q_degree = -1;
  std::size_t checked_equations = 0;
  /// (3,1,2): (1 - 4x) does not divide both P and Q, so the denominator is
  /// exactly (sqrt(1-4x))^(2r-1).
  bool denominator_exact = true;
  std::string detail;
};

GeneralFormReport check_general_form(Pattern tau, int r,
                                     std::size_t order = kDefaultOrder);

/// Finds polynomials P, Q (over Q) of least degree with g = P + s Q modulo
/// x^(K+1), where g, s are given by their x-coefficients 0..K. Requires at
/// least `spare` equations beyond the unknowns.
struct SqrtDecomposition {
  std::vector<BigRational> p, q;
  std::size_t checked_equations = 0;
};
std::optional<SqrtDecomposition> decompose_over_sqrt(
    const std::vector<BigRational>& g, const std::vector<BigRational>& s,
    std::size_t spare = 8);

}  // namespace pathperm
