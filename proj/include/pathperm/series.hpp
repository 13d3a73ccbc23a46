#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pathperm {

using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Power series in t truncated after t^order, with exact rational
/// coefficients. Generating functions in x are stored with x = t^2, so the
/// half-integer powers of x that appear in path weights are plain shifts.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 0);
  TruncatedSeries(std::vector<BigRational> coeffs, std::size_t order);

  static TruncatedSeries constant(const BigRational& c, std::size_t order);
  /// c * t^exponent
  static TruncatedSeries monomial(const BigRational& c, std::size_t exponent,
                                  std::size_t order);
  /// Polynomial given by its coefficients in x (index = power of x).
  static TruncatedSeries x_polynomial(const std::vector<BigRational>& coeffs,
                                      std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; nullopt for the zero series.
  std::optional<std::size_t> valuation() const;
  bool lives_in_x() const;
  /// Coefficient of x^n, i.e. of t^(2n).
  const BigRational& x_coeff(std::size_t n) const { return coeffs_.at(2 * n); }
  std::size_t x_order() const noexcept { return order() / 2; }

  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const BigRational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= BigRational(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& c) { return a *= c; }
  friend TruncatedSeries operator*(const BigRational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<BigRational> coeffs_;
};

/// Multiplication by t^k. Negative k needs valuation >= -k; the order moves
/// with the shift.
TruncatedSeries shift(const TruncatedSeries& s, long k);
/// 1/s for a series with nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& s);
/// Square root of a series with constant term 1 (Newton iteration, checked
/// by squaring).
TruncatedSeries sqrt(const TruncatedSeries& s);
TruncatedSeries pow(const TruncatedSeries& s, unsigned k);

/// First t-exponent (up to the common order) where a and b differ.
std::optional<std::size_t> first_mismatch(const TruncatedSeries& a,
                                          const TruncatedSeries& b);

/// num/den in lowest terms.
inline BigRational ratio(const BigInteger& num, const BigInteger& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

/// Decimal rendering: "p" for integers, "p/q" otherwise.
std::string to_decimal(const BigRational& q);

}  // namespace pathperm
