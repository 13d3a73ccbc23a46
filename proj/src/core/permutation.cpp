#include "pathperm/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <set>

#include "pathperm/error.hpp"

namespace pathperm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::UnsupportedPattern: return "unsupported pattern";
    case ErrorCode::UnsupportedInput: return "unsupported input";
    case ErrorCode::NotInImage: return "not in image";
    case ErrorCode::ResourceGuard: return "resource guard";
    case ErrorCode::CacheCorrupt: return "cache corrupt";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw Error(ErrorCode::InvalidInput,
                  "not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return Permutation();
  const bool compact = text.find(',') == std::string_view::npos && text.size() > 1;
  if (compact) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw Error(ErrorCode::InvalidInput,
                    "bad permutation literal '" + std::string(text) + "'");
      }
      values.push_back(ch - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(start, end - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::InvalidInput,
                  "bad permutation literal '" + std::string(text) + "'");
    }
    values.push_back(v);
    start = end + 1;
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation reduce(std::span<const int> subword) {
  std::vector<int> sorted(subword.begin(), subword.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidInput, "subword has duplicate entries");
  }
  std::vector<int> out;
  out.reserve(subword.size());
  for (int v : subword) {
    out.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1));
  }
  return Permutation(std::move(out));
}

namespace {

void require_pattern(const Permutation& tau) {
  if (tau.size() < 2) {
    throw Error(ErrorCode::UnsupportedPattern, "patterns must have length >= 2");
  }
}

// Calls fn(indices) for every strictly increasing k-tuple of 0-based indices
// in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

bool matches(std::span<const int> values, const std::vector<std::size_t>& idx,
             const Permutation& tau) {
  const auto k = idx.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool lt = values[idx[a]] < values[idx[b]];
      if (lt != (tau.values()[a] < tau.values()[b])) return false;
    }
  }
  return true;
}

struct Shape3 {
  bool first_above_last;  // tau_1 > tau_3
  int middle_rank;        // 0 = smallest, 1 = between, 2 = largest
};

Shape3 shape_of(const Permutation& tau) {
  if (tau.size() != 3) {
    throw Error(ErrorCode::UnsupportedPattern,
                "fast counting needs a length-3 pattern, got " + tau.to_string());
  }
  const auto t = tau.values();
  return {t[0] > t[2], t[1] - 1};
}

std::uint64_t range_mask(int lo, int hi) {
  // bits for values strictly between lo and hi (values 1..64 -> bits 0..63)
  if (hi - lo <= 1) return 0;
  const auto upto = [](int v) -> std::uint64_t {
    // bits for values <= v
    return v >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << v) - 1);
  };
  return upto(hi - 1) & ~upto(lo);
}

}  // namespace

OccurrenceSet find_occurrences(const Permutation& rho, const Permutation& tau) {
  require_pattern(tau);
  OccurrenceSet out{tau, {}};
  const auto values = rho.values();
  for_each_combination(rho.size(), tau.size(), [&](const auto& idx) {
    if (!matches(values, idx, tau)) return;
    std::vector<std::size_t> tuple(idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) tuple[t] = idx[t] + 1;
    out.positions.push_back(std::move(tuple));
  });
  return out;
}

std::uint64_t count_occurrences(const Permutation& rho, const Permutation& tau) {
  require_pattern(tau);
  if (tau.size() == 3) return count_occurrences_fast(rho, tau);
  std::uint64_t count = 0;
  for_each_combination(rho.size(), tau.size(), [&](const auto& idx) {
    if (matches(rho.values(), idx, tau)) ++count;
  });
  return count;
}

std::uint32_t occurrences_ending_at(std::span<const int> values,
                                    std::size_t last, const Permutation& tau) {
  const Shape3 shape = shape_of(tau);
  const int v = values[last];
  std::uint64_t between = 0;
  std::uint32_t count = 0;
  for (std::size_t i = last; i-- > 0;) {
    const int u = values[i];
    if ((u > v) == shape.first_above_last) {
      const int lo = std::min(u, v);
      const int hi = std::max(u, v);
      std::uint64_t mask = 0;
      switch (shape.middle_rank) {
        case 0: mask = range_mask(0, lo); break;
        case 1: mask = range_mask(lo, hi); break;
        default: mask = range_mask(hi, 65); break;
      }
      count += static_cast<std::uint32_t>(std::popcount(between & mask));
    }
    between |= std::uint64_t{1} << (u - 1);
  }
  return count;
}

std::uint64_t count_occurrences_fast(const Permutation& rho,
                                     const Permutation& tau) {
  const Shape3 shape = shape_of(tau);
  const auto values = rho.values();
  const auto n = values.size();
  if (n <= 64) {
    std::uint64_t total = 0;
    for (std::size_t k = 2; k < n; ++k) total += occurrences_ending_at(values, k, tau);
    return total;
  }
  // below[k][v]: positions < k holding a value <= v
  std::vector<std::vector<std::uint32_t>> below(
      n + 1, std::vector<std::uint32_t>(n + 1, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    below[k] = below[k - 1];
    for (std::size_t v = static_cast<std::size_t>(values[k - 1]); v <= n; ++v) {
      ++below[k][v];
    }
  }
  const auto in_window = [&](std::size_t i, std::size_t k, int lo, int hi) {
    // positions strictly between i and k with lo < value < hi (0-based i, k)
    if (hi - lo <= 1) return std::uint64_t{0};
    const auto upto = [&](std::size_t pos, int val) {
      return static_cast<std::int64_t>(below[pos][static_cast<std::size_t>(val)]);
    };
    const auto c = (upto(k, hi - 1) - upto(k, lo)) - (upto(i + 1, hi - 1) - upto(i + 1, lo));
    return static_cast<std::uint64_t>(c);
  };
  std::uint64_t total = 0;
  const int top = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      const int u = values[i], v = values[k];
      if ((u > v) != shape.first_above_last) continue;
      const int lo = std::min(u, v), hi = std::max(u, v);
      switch (shape.middle_rank) {
        case 0: total += in_window(i, k, 0, lo); break;
        case 1: total += in_window(i, k, lo, hi); break;
        default: total += in_window(i, k, hi, top); break;
      }
    }
  }
  return total;
}

std::vector<std::size_t> left_to_right_maxima(const Permutation& rho) {
  std::vector<std::size_t> out;
  int best = 0;
  for (std::size_t i = 1; i <= rho.size(); ++i) {
    if (rho.at(i) > best) {
      best = rho.at(i);
      out.push_back(i);
    }
  }
  return out;
}

bool is_left_to_right_maximum(const Permutation& rho, std::size_t i) {
  for (std::size_t j = 1; j < i; ++j) {
    if (rho.at(j) > rho.at(i)) return false;
  }
  return true;
}

HeightVector heights_312(const Permutation& rho) {
  const auto n = rho.size();
  HeightVector h{std::vector<int>(n, 0)};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 1; k <= n; ++k) {
      if (rho.at(k) < rho.at(i)) ++h.heights[i - 1];
    }
  }
  return h;
}

HeightVector heights_321(const Permutation& rho) {
  const auto n = rho.size();
  HeightVector h{std::vector<int>(n, 0)};
  int preceding_max = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const int v = rho.at(i);
    int count = 0;
    if (v > preceding_max) {
      preceding_max = v;
      for (std::size_t k = i + 1; k <= n; ++k) count += rho.at(k) < v;
    } else {
      for (std::size_t k = i + 1; k <= n; ++k) {
        count += rho.at(k) > v && rho.at(k) < preceding_max;
      }
    }
    h.heights[i - 1] = count;
  }
  return h;
}

Permutation tau_base(const Permutation& rho, const Permutation& tau) {
  if (tau.size() != 3) {
    throw Error(ErrorCode::UnsupportedPattern, "tau_base needs a length-3 pattern");
  }
  const auto occ = find_occurrences(rho, tau);
  std::set<std::size_t> involved;
  for (const auto& tuple : occ.positions) involved.insert(tuple.begin(), tuple.end());
  std::vector<int> subword;
  subword.reserve(involved.size());
  for (auto pos : involved) subword.push_back(rho.at(pos));
  return reduce(subword);
}

Permutation rotate_quarter(const Permutation& rho) {
  // (i, v) -> (n + 1 - v, i)
  const auto n = rho.size();
  std::vector<int> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[n - static_cast<std::size_t>(rho.at(i))] = static_cast<int>(i);
  }
  return Permutation(std::move(out));
}

Permutation reflect_anti_diag(const Permutation& rho) {
  // (i, v) -> (n + 1 - v, n + 1 - i)
  const auto n = rho.size();
  std::vector<int> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[n - static_cast<std::size_t>(rho.at(i))] = static_cast<int>(n + 1 - i);
  }
  return Permutation(std::move(out));
}

Permutation reflect_main_diag(const Permutation& rho) {
  const auto n = rho.size();
  std::vector<int> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(rho.at(i)) - 1] = static_cast<int>(i);
  }
  return Permutation(std::move(out));
}

}  // namespace pathperm
