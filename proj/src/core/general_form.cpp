// Rationalising generating functions against sqrt(1-4x): G = P + sqrt(1-4x) Q
// with P, Q polynomials, found by exact linear algebra on the coefficients.

#include <algorithm>
#include <sstream>

#include "pathperm/generating_functions.hpp"

namespace pathperm {

namespace {

using Vec = std::vector<BigRational>;

// Solves A q = b exactly. Returns nullopt when inconsistent; free
// variables are set to zero.
std::optional<Vec> solve(std::vector<Vec> a, Vec b, std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const BigRational inv = 1 / a[row][col];
    for (std::size_t c = col; c < unknowns; ++c) a[row][c] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t c = col; c < unknowns; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (sgn(b[r]) != 0) return std::nullopt;
  }
  Vec q(unknowns, BigRational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) q[pivot_col[r]] = b[r];
  return q;
}

int degree(const Vec& v) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (sgn(v[k]) != 0) return static_cast<int>(k);
  }
  return -1;
}

void trim(Vec& v) { v.resize(static_cast<std::size_t>(std::max(0, degree(v) + 1))); }

BigRational evaluate(const Vec& poly, const BigRational& x) {
  BigRational acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
  return acc;
}

Vec x_coefficients(const TruncatedSeries& s) {
  Vec out;
  for (std::size_t n = 0; n <= s.x_order(); ++n) out.push_back(s.x_coeff(n));
  return out;
}

std::string poly_string(const Vec& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sgn(p[k]) == 0) continue;
    out << (first ? "" : " ") << (sgn(p[k]) < 0 ? "-" : (first ? "" : "+"))
        << (first ? "" : " ");
    if (k == 0 || abs(p[k]) != 1) out << to_decimal(abs(p[k]));
    if (k == 1) out << (p[k] == 1 || p[k] == -1 ? "x" : " x");
    if (k > 1) out << (p[k] == 1 || p[k] == -1 ? "x^" : " x^") << k;
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace

std::optional<SqrtDecomposition> decompose_over_sqrt(const Vec& g, const Vec& s,
                                                     std::size_t spare) {
  const std::size_t K = std::min(g.size(), s.size());
  if (K == 0) return std::nullopt;
  for (std::size_t d = 0; 2 * d + 2 + spare <= K; ++d) {
    // coefficients n = d+1 .. K-1 of G - S Q must vanish
    std::vector<Vec> a;
    Vec b;
    for (std::size_t n = d + 1; n < K; ++n) {
      Vec row(d + 1, BigRational(0));
      for (std::size_t j = 0; j <= d; ++j) row[j] = s[n - j];
      a.push_back(std::move(row));
      b.push_back(g[n]);
    }
    auto q = solve(std::move(a), std::move(b), d + 1);
    if (!q) continue;
    SqrtDecomposition out;
    out.q = *q;
    out.p.assign(d + 1, BigRational(0));
    for (std::size_t n = 0; n <= d; ++n) {
      BigRational acc = g[n];
      for (std::size_t j = 0; j <= n; ++j) acc -= s[n - j] * out.q[j];
      out.p[n] = acc;
    }
    trim(out.p);
    trim(out.q);
    out.checked_equations = K - d - 1;
    return out;
  }
  return std::nullopt;
}

GeneralFormReport check_general_form(Pattern tau, int r, std::size_t order) {
  GeneralFormReport report;
  report.tau = tau;
  report.r = r;
  report.order = order;
  if (!gf_known(tau, r) || (tau == Pattern::P312 && r < 1)) {
    report.detail = "no generating function available for this (tau, r)";
    return report;
  }
  const auto f = x_coefficients(gf(tau, r, order));
  const auto root_series = sqrt_one_minus_4x(order);
  const auto s = x_coefficients(root_series);

  Vec g;
  if (tau == Pattern::P321) {
    const std::size_t lift = static_cast<std::size_t>(2 * r + 1);
    g.assign(lift, BigRational(0));
    for (const auto& a : f) g.push_back(2 * a);
  } else {
    const auto scaled = gf(tau, r, order) * pow(root_series, static_cast<unsigned>(2 * r - 1));
    g = x_coefficients(scaled);
  }

  const auto dec = decompose_over_sqrt(g, s);
  if (!dec) {
    report.detail = "no polynomial pair found with enough spare equations (order too low?)";
    return report;
  }
  report.p = dec->p;
  report.q = dec->q;
  report.p_degree = degree(dec->p);
  report.q_degree = degree(dec->q);
  report.checked_equations = dec->checked_equations;
  report.pass = true;
  if (tau == Pattern::P312) {
    // S divides P + S Q exactly when (1 - 4x) divides P
    report.denominator_exact = sgn(evaluate(dec->p, ratio(1, 4))) != 0;
    report.pass = report.denominator_exact;
  }
  std::ostringstream detail;
  detail << "P = " << poly_string(dec->p) << "; Q = " << poly_string(dec->q) << "; "
         << dec->checked_equations << " equations checked";
  if (tau == Pattern::P312 && !report.denominator_exact) {
    detail << "; denominator reduces below sqrt(1-4x)^" << 2 * r - 1;
  }
  report.detail = detail.str();
  return report;
}

}  // namespace pathperm
