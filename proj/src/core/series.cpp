#include "pathperm/series.hpp"

#include <algorithm>

#include "pathperm/error.hpp"

namespace pathperm {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, BigRational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, BigRational(0));
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, std::size_t order) {
  return monomial(c, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const BigRational& c, std::size_t exponent,
                                          std::size_t order) {
  TruncatedSeries out(order);
  if (exponent <= order) out.coeffs_[exponent] = c;
  return out;
}

TruncatedSeries TruncatedSeries::x_polynomial(const std::vector<BigRational>& coeffs,
                                              std::size_t order) {
  TruncatedSeries out(order);
  for (std::size_t n = 0; n < coeffs.size() && 2 * n <= order; ++n) {
    out.coeffs_[2 * n] = coeffs[n];
  }
  return out;
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return k;
  }
  return std::nullopt;
}

bool TruncatedSeries::lives_in_x() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw Error(ErrorCode::InvalidInput, "cannot extend a truncated series");
  }
  return TruncatedSeries(std::vector<BigRational>(coeffs_.begin(),
                                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)),
                         order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (sgn(s[0]) == 0) {
    throw Error(ErrorCode::InvalidInput, "reciprocal of a series without constant term");
  }
  const auto order = s.order();
  std::vector<BigRational> out(order + 1);
  const BigRational inv = 1 / s[0];
  out[0] = inv;
  for (std::size_t n = 1; n <= order; ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(s[k]) != 0) acc += s[k] * out[n - k];
    }
    out[n] = -acc * inv;
  }
  return TruncatedSeries(std::move(out), order);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto vb = b.valuation();
  if (!vb) throw Error(ErrorCode::InvalidInput, "division by the zero series");
  const auto va = a.valuation();
  if (!va) {
    const auto order = std::min(a.order(), b.order()) - *vb;
    return TruncatedSeries(order);
  }
  if (*va < *vb) {
    throw Error(ErrorCode::InvalidInput,
                "divisor valuation exceeds dividend valuation");
  }
  const auto v = static_cast<long>(*vb);
  return shift(a, -v) * reciprocal(shift(b, -v));
}

TruncatedSeries shift(const TruncatedSeries& s, long k) {
  if (k >= 0) {
    const auto order = s.order() + static_cast<std::size_t>(k);
    std::vector<BigRational> out(order + 1, BigRational(0));
    for (std::size_t i = 0; i <= s.order(); ++i) out[i + static_cast<std::size_t>(k)] = s[i];
    return TruncatedSeries(std::move(out), order);
  }
  const auto drop = static_cast<std::size_t>(-k);
  const auto v = s.valuation();
  if (v && *v < drop) {
    throw Error(ErrorCode::InvalidInput,
                "negative shift by " + std::to_string(drop) + " below valuation " +
                    std::to_string(*v));
  }
  if (drop > s.order()) {
    throw Error(ErrorCode::InvalidInput, "negative shift exceeds the truncation order");
  }
  std::vector<BigRational> out(s.coeffs().begin() + static_cast<std::ptrdiff_t>(drop),
                               s.coeffs().end());
  return TruncatedSeries(std::move(out), s.order() - drop);
}

TruncatedSeries sqrt(const TruncatedSeries& s) {
  if (s[0] != 1) {
    throw Error(ErrorCode::InvalidInput, "sqrt needs constant term 1");
  }
  const auto order = s.order();
  // Newton: y <- (y + s / y) / 2, doubling the correct prefix each round
  TruncatedSeries y = TruncatedSeries::constant(1, 0);
  std::size_t known = 0;
  while (known < order) {
    const auto next = std::min(order, 2 * known + 1);
    TruncatedSeries widened(y.coeffs(), next);
    y = (widened + s.truncated(next) * reciprocal(widened)) * ratio(1, 2);
    known = next;
  }
  y = TruncatedSeries(y.coeffs(), order);
  if (y * y != s) {
    throw Error(ErrorCode::InvalidInput, "sqrt failed to square back to its radicand");
  }
  return y;
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned k) {
  TruncatedSeries result = TruncatedSeries::constant(1, s.order());
  TruncatedSeries base = s;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::optional<std::size_t> first_mismatch(const TruncatedSeries& a,
                                          const TruncatedSeries& b) {
  const auto order = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= order; ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

std::string to_decimal(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pathperm
