// Piece-wise path assemblies of the one- and two-occurrence generating
// functions, checked against their closed forms and against gf().

#include <algorithm>
#include <tuple>

#include "pathperm/enumerate.hpp"
#include "pathperm/generating_functions.hpp"

namespace pathperm {

namespace {

class Workspace {
 public:
  explicit Workspace(std::size_t order) : order_(order), c_(catalan_series(order)) {
    powers_.push_back(TruncatedSeries::constant(1, order));
    const auto one = TruncatedSeries::constant(1, order);
    inv_1_minus_x_ = reciprocal(one - t(2));
    inv_1_minus_cx_ = reciprocal(one - up(c_, 2));
    inv_1_minus_c2x_ = reciprocal(one - up(cp(2), 2));
  }

  std::size_t order() const { return order_; }
  const TruncatedSeries& c() const { return c_; }

  const TruncatedSeries& cp(std::size_t j) {
    while (powers_.size() <= j) powers_.push_back(powers_.back() * c_);
    return powers_[j];
  }

  TruncatedSeries t(std::size_t k, long coef = 1) const {
    return TruncatedSeries::monomial(coef, k, order_);
  }
  TruncatedSeries one() const { return t(0); }

  /// s * t^k, kept at the working order
  TruncatedSeries up(const TruncatedSeries& s, std::size_t k) const {
    if (k > order_) return TruncatedSeries(order_);
    return shift(s, static_cast<long>(k)).truncated(order_);
  }
  /// s / t^k
  TruncatedSeries down(const TruncatedSeries& s, std::size_t k) const {
    return shift(s, -static_cast<long>(k));
  }

  /// sum of coef * c^i * x^j over (coef, i, j)
  TruncatedSeries cx_poly(std::initializer_list<std::tuple<long, std::size_t, std::size_t>> terms) {
    TruncatedSeries out(order_);
    for (const auto& [coef, ci, xj] : terms) out += up(cp(ci), 2 * xj) * BigRational(coef);
    return out;
  }

  /// c_{k,l} from the cached powers of c
  TruncatedSeries ckl(std::size_t k, std::size_t l) {
    TruncatedSeries out(order_);
    for (std::size_t h = 0; h <= std::min(k, l); ++h) out += up(cp(k + l - 2 * h + 1), k + l - 2 * h);
    return out;
  }

  const TruncatedSeries& inv_1_minus_x() const { return inv_1_minus_x_; }
  const TruncatedSeries& inv_1_minus_cx() const { return inv_1_minus_cx_; }
  const TruncatedSeries& inv_1_minus_c2x() const { return inv_1_minus_c2x_; }

 private:
  std::size_t order_;
  TruncatedSeries c_;
  std::vector<TruncatedSeries> powers_;
  TruncatedSeries inv_1_minus_x_, inv_1_minus_cx_, inv_1_minus_c2x_;
};

IdentityCheck compare(std::string name, const TruncatedSeries& lhs,
                      const TruncatedSeries& rhs, std::size_t order) {
  IdentityCheck out;
  out.name = std::move(name);
  out.first_mismatch = first_mismatch(lhs.truncated(order), rhs.truncated(order));
  out.pass = !out.first_mismatch.has_value();
  return out;
}

}  // namespace

AssemblyReport check_assemblies(std::size_t order) {
  AssemblyReport report;
  report.order = order;
  // room for the divisions by sqrt(x) and x below
  Workspace w(order + 4);
  const auto M = w.order();
  auto& checks = report.checks;

  // climbing segments and the k-to-l generalisation
  {
    bool ok = true;
    std::optional<std::size_t> bad;
    for (std::size_t l = 0; l <= 8 && ok; ++l) {
      const auto lhs = c_k_l(0, l, order);
      const auto rhs = climb_segment(l, order);
      bad = first_mismatch(lhs, rhs);
      ok = !bad;
      for (std::size_t k = 0; k <= l && ok; ++k) {
        bad = first_mismatch(c_k_l(k, l, order), c_k_l_closed(k, l, order));
        ok = !bad;
      }
    }
    checks.push_back({"c_{k,l} sum = closed form (k <= l <= 8)", ok, bad});
  }

  // (3,1,2), one occurrence: segment up, up, down, jump, down, up at height l
  TruncatedSeries f312_1_sum(M);
  for (std::size_t l = 1; 2 * l + 5 <= M; ++l) {
    const auto climb = w.up(w.cp(l + 1), l);
    f312_1_sum += w.up(climb * climb, 5);
  }
  f312_1_sum = w.down(f312_1_sum, 1);
  const auto f312_1 = w.up(w.cp(4), 6) * w.inv_1_minus_c2x();
  checks.push_back(compare("F(312,1): sum over l = c^4 x^3/(1-c^2 x)", f312_1_sum, f312_1, order));
  checks.push_back(compare("F(312,1): c-form = sqrt-form", f312_1, gf(Pattern::P312, 1, M), order));

  // (3,1,2), two occurrences, one jump of depth 2
  TruncatedSeries s312_2_2_sum(M);
  for (std::size_t l = 1; 2 * l + 8 <= M; ++l) {
    s312_2_2_sum += w.up(w.up(w.cp(l + 1), l) * w.up(w.cp(l + 2), l + 1), 7);
  }
  const auto s312_2_2 = w.up(w.cp(5), 10) * w.inv_1_minus_c2x();
  checks.push_back(compare("S312-2-2: sum over l = c^5 x^5/(1-c^2 x)", s312_2_2_sum, s312_2_2, order));

  // (3,1,2), two occurrences, two jumps of depth 1 joined by an arbitrary path
  TruncatedSeries s312_2_11_sum(M);
  for (std::size_t l = 1; 2 * l + 10 <= M; ++l) {
    TruncatedSeries inner(M);
    for (std::size_t k = 1; k <= l; ++k) {
      inner += w.up(w.ckl(k, l) * w.up(w.cp(k + 1), k), 5);
    }
    for (std::size_t k = l + 1; 2 * k + 10 <= M; ++k) {
      inner += w.up(w.ckl(l, k) * w.up(w.cp(k + 1), k), 5);
    }
    s312_2_11_sum += w.up(w.up(w.cp(l + 1), l) * inner, 5);
  }
  const auto s312_2_11 = w.up(w.cp(5), 12) *
                         w.cx_poly({{1, 0, 0}, {1, 2, 1}, {-1, 4, 2}}) *
                         pow(w.inv_1_minus_c2x(), 3);
  checks.push_back(compare("S312-2-11: double sum = c^5 x^6 (1+c^2x-c^4x^2)/(1-c^2x)^3",
                           s312_2_11_sum, s312_2_11, order));

  const auto f312_2_assembled =
      w.up(f312_1, 2) * BigRational(2) + w.down(s312_2_2, 2) * BigRational(2) + w.down(s312_2_11, 2);
  checks.push_back(compare("F(312,2) = 2x F(312,1) + 2 S312-2-2/x + S312-2-11/x",
                           f312_2_assembled, gf(Pattern::P312, 2, M), order));
  const auto f312_2_expanded =
      w.up(w.cp(4), 8) * pow(w.inv_1_minus_c2x(), 3) *
      w.cx_poly({{2, 0, 0}, {2, 1, 0}, {1, 1, 1}, {-4, 2, 1}, {-4, 3, 1},
                 {1, 3, 2}, {2, 4, 2}, {2, 5, 2}, {-1, 5, 3}});
  checks.push_back(compare("F(312,2): expanded c-form = sqrt-form", f312_2_expanded,
                           gf(Pattern::P312, 2, M), order));

  // (3,2,1), one occurrence: segments after the maximum preceding the jump
  const auto tail = w.inv_1_minus_cx() * w.inv_1_minus_x();
  const auto seg321_1 = [&](std::size_t l) {  // closed form, l >= 1
    return w.up(w.cp(2), l + 6) * tail;
  };
  {
    bool ok = true;
    std::optional<std::size_t> bad;
    for (std::size_t l = 1; l + 6 <= M && ok; ++l) {
      TruncatedSeries sum(M);
      for (std::size_t k = 0; 2 * k + 6 + l <= M; ++k) {
        sum += w.up(w.inv_1_minus_x(), k + 5 + l) * w.up(w.cp(k + 2), k + 1);
      }
      bad = first_mismatch(sum.truncated(order), seg321_1(l).truncated(order));
      ok = !bad;
    }
    checks.push_back({"F(321,1) segment: sum over k = c^2 x^((l+6)/2)/((1-cx)(1-x))", ok, bad});
  }
  TruncatedSeries f321_1_sum = w.c() * w.up(w.cp(2), 7) * tail;
  for (std::size_t l = 1; 2 * l + 7 <= M; ++l) {
    f321_1_sum += w.up(w.cp(l + 2), l + 1) * seg321_1(l);
  }
  f321_1_sum = w.down(f321_1_sum, 1);
  const auto f321_1 = w.up(w.cp(3), 6) * w.cx_poly({{1, 2, 1}, {-1, 1, 1}, {1, 0, 0}}) *
                      w.inv_1_minus_x() * pow(w.inv_1_minus_cx(), 2);
  checks.push_back(compare("F(321,1): assembly = c^3 x^3 (c^2x-cx+1)/((1-x)(1-cx)^2)",
                           f321_1_sum, f321_1, order));
  checks.push_back(compare("F(321,1): c-form = sqrt-form", f321_1, gf(Pattern::P321, 1, M), order));

  // (3,2,1), two occurrences, one jump of depth 2
  const auto seg321_2 = [&](std::size_t l) {  // closed form, l >= 2
    return w.up(w.cp(3), l + 6) * tail;
  };
  {
    bool ok = true;
    std::optional<std::size_t> bad;
    for (std::size_t l = 2; l + 6 <= M && ok; ++l) {
      TruncatedSeries sum(M);
      for (std::size_t k = 0; 2 * k + 6 + l <= M; ++k) {
        sum += w.up(w.inv_1_minus_x(), k + 4 + l) * w.up(w.cp(k + 3), k + 2);
      }
      bad = first_mismatch(sum.truncated(order), seg321_2(l).truncated(order));
      ok = !bad;
    }
    checks.push_back({"S321-2-2 segment: sum over k = c^3 x^((l+6)/2)/((1-cx)(1-x))", ok, bad});
  }
  TruncatedSeries s321_2_2_sum = w.c() * w.up(w.cp(3), 10) * tail +
                                 w.up(w.cp(3), 3) * w.up(w.cp(3), 9) * tail;
  for (std::size_t l = 2; 2 * l + 8 <= M; ++l) {
    s321_2_2_sum += w.up(w.cp(l + 2), l + 2) * seg321_2(l);
  }
  const auto s321_2_2 = w.up(w.cp(4), 10) *
                        w.cx_poly({{1, 0, 0}, {-1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {-1, 3, 2}}) *
                        w.inv_1_minus_x() * pow(w.inv_1_minus_cx(), 2);
  checks.push_back(compare(
      "S321-2-2: assembly = c^4 x^5 (1-cx+c^2x+c^3x-c^3x^2)/((1-x)(1-cx)^2)",
      s321_2_2_sum, s321_2_2, order));

  // (3,2,1), two occurrences, two jumps of depth 1
  const auto s321_2_11 =
      w.up(w.cp(3), 12) * w.cx_poly({{1, 0, 0}, {-1, 1, 1}, {1, 2, 1}}) *
      pow(w.inv_1_minus_x(), 3) * pow(w.inv_1_minus_cx(), 4) *
      w.cx_poly({{2, 0, 0}, {-1, 0, 1}, {-2, 1, 1}, {1, 2, 1}, {1, 1, 2},
                 {1, 3, 2}, {1, 4, 2}, {-1, 3, 3}, {-2, 4, 3}, {1, 4, 4}});
  const auto f321_2_assembled = w.down(s321_2_11, 2) + w.down(s321_2_2, 2) * BigRational(2) +
                                w.up(f321_1, 2);
  checks.push_back(compare("F(321,2) = S321-2-11/x + 2 S321-2-2/x + x F(321,1)",
                           f321_2_assembled, gf(Pattern::P321, 2, M), order));
  const auto f321_2_expanded =
      w.up(w.cp(3), 8) * pow(w.inv_1_minus_x(), 3) * pow(w.inv_1_minus_cx(), 4) *
      w.cx_poly({{1, 0, 0},  {2, 1, 0},  {-7, 1, 1}, {-5, 2, 1}, {2, 3, 1},  {2, 4, 1},
                 {4, 1, 2},  {16, 2, 2}, {-10, 4, 2}, {-4, 5, 2}, {-1, 1, 3}, {-10, 2, 3},
                 {-9, 3, 3}, {15, 4, 3}, {14, 5, 3}, {2, 6, 3},  {2, 2, 4},  {6, 3, 4},
                 {-7, 4, 4}, {-16, 5, 4}, {-5, 6, 4}, {-1, 3, 5}, {1, 4, 5},  {7, 5, 5},
                 {4, 6, 5},  {-1, 5, 6}, {-1, 6, 6}});
  checks.push_back(compare("F(321,2): expanded c-form = sqrt-form", f321_2_expanded,
                           gf(Pattern::P321, 2, M), order));

  // Independent of the segment sums: x^(n+1) in each two-occurrence piece
  // counts the permutations of S_n with two occurrences whose encoded path
  // has one jump of depth 2, resp. two jumps of depth 1.
  const auto by_shape = [&](Pattern tau, const TruncatedSeries& depth2,
                            const TruncatedSeries& two_single) {
    std::optional<std::size_t> bad2, bad11;
    const std::size_t n_max = std::min<std::size_t>(8, order / 2 >= 1 ? order / 2 - 1 : 0);
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::uint64_t j2 = 0, j11 = 0;
      for (const auto& rho : enumerate_class(n, as_permutation(tau), 2)) {
        const auto js = jumps(psi(rho, tau));
        if (js.size() == 1 && js[0].depth == 2) ++j2;
        if (js.size() == 2 && js[0].depth == 1 && js[1].depth == 1) ++j11;
      }
      if (!bad2 && depth2.x_coeff(n + 1) != BigRational(static_cast<unsigned long>(j2))) bad2 = 2 * n + 2;
      if (!bad11 && two_single.x_coeff(n + 1) != BigRational(static_cast<unsigned long>(j11))) bad11 = 2 * n + 2;
    }
    const std::string name = pattern_name(tau);
    checks.push_back({"S" + name + "-2-2 = enumerated paths with one depth-2 jump (n <= " +
                          std::to_string(n_max) + ")", !bad2, bad2});
    checks.push_back({"S" + name + "-2-11 = enumerated paths with two depth-1 jumps (n <= " +
                          std::to_string(n_max) + ")", !bad11, bad11});
  };
  by_shape(Pattern::P312, s312_2_2, s312_2_11);
  by_shape(Pattern::P321, s321_2_2, s321_2_11);

  for (auto tau : {Pattern::P312, Pattern::P321}) {
    checks.push_back(compare(std::string("F(") + pattern_name(tau) + ",0): c = sqrt-form",
                             w.c(), gf(tau, 0, M), order));
  }
  return report;
}

}  // namespace pathperm
