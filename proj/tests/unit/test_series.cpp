#include <doctest.h>

#include "oracles.hpp"
#include "pathperm/error.hpp"
#include "pathperm/generating_functions.hpp"

using namespace pathperm;

namespace {

TruncatedSeries xpoly(std::initializer_list<long> c, std::size_t order) {
  std::vector<BigRational> v;
  for (long k : c) v.emplace_back(k);
  return TruncatedSeries::x_polynomial(v, order);
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const auto a = xpoly({1, 2}, 10);  // 1 + 2x
  const auto b = xpoly({3, 0, 1}, 10);
  const auto prod = a * b;
  CHECK(prod.x_coeff(0) == 3);
  CHECK(prod.x_coeff(1) == 6);
  CHECK(prod.x_coeff(2) == 1);
  CHECK(prod.x_coeff(3) == 2);
  CHECK(prod.x_coeff(4) == 0);
  CHECK((prod / b) == a);
  CHECK(reciprocal(a) * a == TruncatedSeries::constant(1, 10));
  CHECK(pow(a, 0) == TruncatedSeries::constant(1, 10));
  CHECK(pow(a, 3) == a * a * a);
  CHECK(a.lives_in_x());
  CHECK_FALSE(TruncatedSeries::monomial(1, 3, 10).lives_in_x());
  CHECK(TruncatedSeries::monomial(5, 3, 10).valuation() == 3u);
  CHECK_FALSE(TruncatedSeries(10).valuation().has_value());
  CHECK(shift(TruncatedSeries::monomial(1, 3, 10), -3) == TruncatedSeries::constant(1, 7));
  CHECK_THROWS_AS(shift(TruncatedSeries::monomial(1, 3, 10), -4), Error);
  CHECK_THROWS_AS(reciprocal(TruncatedSeries::monomial(1, 1, 10)), Error);
  CHECK(first_mismatch(a, a) == std::nullopt);
  CHECK(first_mismatch(a, b) == 0u);
  CHECK(to_decimal(ratio(6, 4)) == "3/2");
  CHECK(to_decimal(BigRational(-7)) == "-7");
}

TEST_CASE("square roots") {
  const auto s = sqrt_one_minus_4x(60);
  CHECK(s * s == xpoly({1, -4}, 60));
  const auto t = sqrt(xpoly({1, 2, 3}, 40));
  CHECK(t * t == xpoly({1, 2, 3}, 40));
  // -2 C_{n-1} for n >= 1
  for (std::size_t n = 1; n <= 30; ++n) CHECK(s.x_coeff(n) == -2 * oracle::catalan(static_cast<long>(n) - 1));
  CHECK_THROWS_AS(sqrt(xpoly({2, 1}, 10)), Error);
}

TEST_CASE("Catalan series identities") {
  const std::size_t order = 80;
  const auto c = catalan_series(order);
  const auto x = TruncatedSeries::monomial(1, 2, order);
  const auto one = TruncatedSeries::constant(1, order);
  CHECK(c == one + x * c * c);
  CHECK(reciprocal(c) == one - x * c);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(c.x_coeff(n) == oracle::catalan(static_cast<long>(n)));
}

TEST_CASE("segment series") {
  const std::size_t order = 40;
  for (std::size_t l = 0; l <= 6; ++l) {
    CHECK(climb_segment(l, order) == c_k_l(0, l, order));
    for (std::size_t k = 0; k <= l; ++k) {
      CHECK(c_k_l(k, l, order) == c_k_l(l, k, order));
      CHECK(c_k_l(k, l, order) == c_k_l_closed(k, l, order));
    }
  }
  // coefficient of t^m in c_{k,l} counts nonnegative up/down paths from k to l
  // with m steps
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t l = 0; l <= 3; ++l) {
      const auto s = c_k_l(k, l, 20);
      for (std::size_t steps = 0; steps <= 20; ++steps) {
        const long ups2 = static_cast<long>(steps + l) - static_cast<long>(k);
        mpz_class expected = 0;
        if (ups2 >= 0 && ups2 % 2 == 0 && static_cast<std::size_t>(ups2 / 2) <= steps) {
          const auto downs = steps - static_cast<std::size_t>(ups2 / 2);
          expected = count_partial_paths(k, l, downs);
        }
        REQUIRE(s[steps] == BigRational(expected));
      }
    }
  }
}

TEST_CASE("generating functions against the closed counts") {
  for (auto tau : {Pattern::P312, Pattern::P321}) {
    for (int r = 0; r <= 2; ++r) {
      const auto f = gf(tau, r, 80);
      for (std::size_t n = 0; n <= 40; ++n) REQUIRE(f.x_coeff(n) == BigRational(count_closed_form(tau, r, n)));
    }
  }
}

TEST_CASE("generating functions are integer series in x") {
  for (auto tau : {Pattern::P312, Pattern::P321}) {
    for (int r = 0; r <= 4; ++r) {
      if (!gf_known(tau, r)) continue;
      const auto f = gf(tau, r, 80);
      CHECK(f.lives_in_x());
      for (std::size_t n = 0; n <= 40; ++n) {
        REQUIRE(f.x_coeff(n).get_den() == 1);
        REQUIRE(f.x_coeff(n) >= 0);
      }
    }
  }
  CHECK(gf_is_conjecture(Pattern::P321, 3));
  CHECK_FALSE(gf_is_conjecture(Pattern::P312, 2));
  CHECK_FALSE(gf_known(Pattern::P312, 3));
  CHECK_THROWS_AS(gf(Pattern::P312, 3, 20), Error);
  CHECK_THROWS_AS(count_closed_form(Pattern::P321, 3, 5), Error);
}

TEST_CASE("small coefficients against exhaustive histograms") {
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto h312 = oracle::histogram(n, {3, 1, 2});
    const auto h321 = oracle::histogram(n, {3, 2, 1});
    const auto at = [](const std::vector<std::uint64_t>& h, int r) { return r < static_cast<int>(h.size()) ? h[r] : 0; };
    for (int r = 0; r <= 4; ++r) {
      REQUIRE(gf(Pattern::P321, r, 20).x_coeff(n) == BigRational(static_cast<unsigned long>(at(h321, r))));
      if (r <= 2) REQUIRE(gf(Pattern::P312, r, 20).x_coeff(n) == BigRational(static_cast<unsigned long>(at(h312, r))));
    }
  }
}

TEST_CASE("closed counts, small values") {
  CHECK(count_closed_form(Pattern::P312, 0, 0) == 1);
  CHECK(count_closed_form(Pattern::P312, 1, 1) == 0);
  CHECK(count_closed_form(Pattern::P312, 1, 3) == 1);
  CHECK(count_closed_form(Pattern::P312, 1, 5) == 21);
  CHECK(count_closed_form(Pattern::P312, 2, 5) == 23);
  CHECK(count_closed_form(Pattern::P321, 1, 4) == 6);
  CHECK(count_closed_form(Pattern::P321, 2, 4) == 3);
}

TEST_CASE("degree-4 conjecture needs the minus sign") {
  // numerator with the square-root term added: x^9 does not divide it
  const std::size_t work = 60;
  const auto root = sqrt_one_minus_4x(work);
  const auto a = xpoly({1, -12, 50, -65, -107, 437, -588, 492, -314, 108, -3}, work);
  const auto b = xpoly({1, -10, 32, -17, -107, 245, -256, 192, -102, 18, 1}, work);
  const auto plus = a + root * b;
  const auto minus = a - root * b;
  REQUIRE(plus.valuation().has_value());
  CHECK(*plus.valuation() < 18);
  REQUIRE(minus.valuation().has_value());
  CHECK(*minus.valuation() >= 18);
}

TEST_CASE("decompose_over_sqrt recovers a planted pair") {
  const std::size_t k = 30;
  const auto s = sqrt_one_minus_4x(2 * k);
  const auto g = xpoly({2, -1, 5}, 2 * k) + s * xpoly({-3, 0, 1, 4}, 2 * k);
  std::vector<BigRational> gx, sx;
  for (std::size_t n = 0; n <= k; ++n) {
    gx.push_back(g.x_coeff(n));
    sx.push_back(s.x_coeff(n));
  }
  auto dec = decompose_over_sqrt(gx, sx);
  REQUIRE(dec.has_value());
  dec->p.resize(3);
  dec->q.resize(4);
  CHECK(dec->p == std::vector<BigRational>{2, -1, 5});
  CHECK(dec->q == std::vector<BigRational>{-3, 0, 1, 4});
}

TEST_CASE("general form") {
  for (int r = 1; r <= 4; ++r) {
    const auto rep = check_general_form(Pattern::P321, r, 80);
    CHECK_MESSAGE(rep.pass, rep.detail);
    CHECK(rep.p_degree >= 0);
  }
  for (int r = 1; r <= 2; ++r) {
    const auto rep = check_general_form(Pattern::P312, r, 80);
    CHECK_MESSAGE(rep.pass, rep.detail);
    CHECK(rep.denominator_exact);
  }
  const auto r1 = check_general_form(Pattern::P321, 1, 80);
  CHECK(r1.p_degree == 3);
  CHECK(r1.q_degree == 2);
}

TEST_CASE("assemblies") {
  const auto rep = check_assemblies(24);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() >= 10);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
}
