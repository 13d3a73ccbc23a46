#include "pathperm/generating_functions.hpp"

#include "pathperm/error.hpp"

namespace pathperm {

TruncatedSeries sqrt_one_minus_4x(std::size_t order) {
  return sqrt(TruncatedSeries::x_polynomial({1, -4}, order));
}

TruncatedSeries catalan_series(std::size_t order) {
  const auto root = sqrt_one_minus_4x(order + 2);
  const auto numerator = TruncatedSeries::constant(1, order + 2) - root;
  return shift(numerator, -2) * ratio(1, 2);
}

namespace {

struct ClosedForm {
  // F = (A + sqrt(1-4x)^e B) / (2 x^k), A and B polynomials in x
  std::vector<BigRational> a, b;
  int sqrt_power = 1;
  std::size_t x_denominator = 0;
};

std::vector<BigRational> poly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> out;
  for (long c : coeffs) out.emplace_back(c);
  return out;
}

ClosedForm closed_form(Pattern tau, int r) {
  if (r == 0) return {poly({1}), poly({-1}), 1, 1};
  if (tau == Pattern::P312) {
    switch (r) {
      case 1: return {poly({-1, 1}), poly({1, -3}), -1, 0};
      case 2: return {poly({-2, 3, 1}), poly({2, -15, 29, -4, 2}), -3, 0};
      default: break;
    }
  } else {
    switch (r) {
      case 1: return {poly({1, -6, 9, -2}), poly({-1, 4, -3}), 1, 3};
      case 2: return {poly({1, -8, 20, -17, 7, -5}), poly({-1, 6, -10, 5, -3, 1}), 1, 5};
      case 3:
        return {poly({1, -10, 33, -32, -31, 70, -35, 0, 2}),
                poly({-1, 8, -19, 6, 27, -28, 7, 2}), 1, 7};
      case 4:
        // The square-root term enters with a minus sign; with a plus sign the
        // expression has a pole of order 9 at x = 0.
        return {poly({1, -12, 50, -65, -107, 437, -588, 492, -314, 108, -3}),
                poly({-1, 10, -32, 17, 107, -245, 256, -192, 102, -18, -1}), 1, 9};
      default: break;
    }
  }
  throw Error(ErrorCode::UnsupportedInput,
              std::string("no generating function for pattern ") + pattern_name(tau) +
                  " with r = " + std::to_string(r));
}

BigInteger binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

}  // namespace

bool gf_known(Pattern tau, int r) {
  if (r < 0) return false;
  return tau == Pattern::P312 ? r <= 2 : r <= 4;
}

bool gf_is_conjecture(Pattern tau, int r) { return tau == Pattern::P321 && r >= 3 && r <= 4; }

TruncatedSeries gf(Pattern tau, int r, std::size_t order) {
  const auto form = closed_form(tau, r);
  const std::size_t drop = 2 * form.x_denominator;
  const std::size_t work = order + drop;
  const auto root = sqrt_one_minus_4x(work);
  TruncatedSeries radical = root;
  if (form.sqrt_power < 0) {
    radical = reciprocal(pow(root, static_cast<unsigned>(-form.sqrt_power)));
  } else {
    radical = pow(root, static_cast<unsigned>(form.sqrt_power));
  }
  auto numerator = TruncatedSeries::x_polynomial(form.a, work) +
                   radical * TruncatedSeries::x_polynomial(form.b, work);
  numerator *= ratio(1, 2);
  return shift(numerator, -static_cast<long>(drop)).truncated(order);
}

BigInteger count_closed_form(Pattern tau, int r, std::size_t n) {
  if (r < 0 || r > 2) {
    throw Error(ErrorCode::UnsupportedInput, "closed counting formulas exist for r = 0, 1, 2");
  }
  if (n <= 1) return r == 0 ? 1 : 0;
  const long m = static_cast<long>(n);
  BigRational value;
  if (r == 0) {
    value = ratio(binom(2 * m, m), m + 1);
  } else if (tau == Pattern::P312 && r == 1) {
    value = binom(2 * m - 3, m - 3);
  } else if (tau == Pattern::P312) {
    value = BigRational(binom(2 * m - 6, m - 4)) *
            ratio(m * m * m + 17 * m * m - 80 * m + 80, 2 * m * (m - 1));
  } else if (r == 1) {
    value = ratio(3, m) * BigRational(binom(2 * m, m - 3));
  } else {
    value = ratio(59 * m * m + 117 * m + 100, 2 * m * (2 * m - 1) * (m + 5)) *
            BigRational(binom(2 * m, m - 4));
  }
  value.canonicalize();
  if (value.get_den() != 1) {
    throw Error(ErrorCode::InvalidInput, "closed formula produced a non-integer");
  }
  return value.get_num();
}

TruncatedSeries climb_segment(std::size_t l, std::size_t order) {
  const auto c = catalan_series(order);
  return shift(pow(c, static_cast<unsigned>(l + 1)), static_cast<long>(l)).truncated(order);
}

TruncatedSeries c_k_l(std::size_t k, std::size_t l, std::size_t order) {
  const auto c = catalan_series(order);
  TruncatedSeries total(order);
  const auto lowest = std::min(k, l);
  for (std::size_t h = 0; h <= lowest; ++h) {
    const auto span = k + l - 2 * h;  // steps down to height h and back up
    if (span > order) continue;
    total += shift(pow(c, static_cast<unsigned>(span + 1)), static_cast<long>(span)).truncated(order);
  }
  return total;
}

TruncatedSeries c_k_l_closed(std::size_t k, std::size_t l, std::size_t order) {
  if (l < k) {
    throw Error(ErrorCode::InvalidInput, "closed form of c_{k,l} needs l >= k");
  }
  const auto c = catalan_series(order);
  const auto c2x = shift(c * c, 2).truncated(order);
  const auto one = TruncatedSeries::constant(1, order);
  const auto numerator =
      (pow(c2x, static_cast<unsigned>(k + 1)) - one) *
      shift(pow(c, static_cast<unsigned>(l - k + 1)), static_cast<long>(l - k)).truncated(order);
  return numerator / (c2x - one);
}

bool AssemblyReport::all_pass() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return !checks.empty();
}

}  // namespace pathperm
