#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library's fast paths, so they serve as independent ground truth.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Values = std::vector<int>;

inline void for_each_permutation(std::size_t n, const std::function<void(const Values&)>& f) {
  Values v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

inline Values reduce(const Values& w) {
  Values out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = 1 + static_cast<int>(std::count_if(w.begin(), w.end(), [&](int x) { return x < w[i]; }));
  }
  return out;
}

// all index triples (0-based) whose subword reduces to tau
inline std::vector<std::array<std::size_t, 3>> occurrences(const Values& rho, const Values& tau) {
  std::vector<std::array<std::size_t, 3>> out;
  const auto n = rho.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (reduce({rho[a], rho[b], rho[c]}) == tau) out.push_back({a, b, c});
  return out;
}

inline std::size_t count(const Values& rho, const Values& tau) { return occurrences(rho, tau).size(); }

inline bool is_max(const Values& rho, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j)
    if (rho[j] > rho[i]) return false;
  return true;
}

inline Values heights_312(const Values& rho) {
  Values h;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    int c = 0;
    for (std::size_t j = i + 1; j < rho.size(); ++j) c += rho[j] < rho[i];
    h.push_back(c);
  }
  return h;
}

inline Values heights_321(const Values& rho) {
  Values h;
  int top = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    int c = 0;
    if (is_max(rho, i)) {
      top = rho[i];
      for (std::size_t j = i + 1; j < rho.size(); ++j) c += rho[j] < rho[i];
    } else {
      for (std::size_t j = i + 1; j < rho.size(); ++j) c += rho[j] > rho[i] && rho[j] < top;
    }
    h.push_back(c);
  }
  return h;
}

// before each down-step climb to h+1 (U) or drop to it (J)
inline std::string path_from_heights(const Values& h) {
  std::string out;
  int cur = 0;
  for (int x : h) {
    for (; cur < x + 1; ++cur) out += 'U';
    for (; cur > x + 1; --cur) out += 'J';
    out += 'D';
    --cur;
  }
  return out;
}

// every word over {U, D, J} with n D's and s J's that stays >= 0 and ends at 0
inline std::vector<std::string> all_paths(std::size_t n, std::size_t s) {
  std::vector<std::string> out;
  const std::size_t len = 2 * n + 2 * s;  // ups = n + s
  std::string w(len, 'U');
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t, int)> rec =
      [&](std::size_t pos, std::size_t ups, std::size_t downs, std::size_t jumps, int height) {
        if (height < 0) return;
        if (pos == len) {
          if (height == 0) out.push_back(w);
          return;
        }
        if (ups < n + s) { w[pos] = 'U'; rec(pos + 1, ups + 1, downs, jumps, height + 1); }
        if (downs < n) { w[pos] = 'D'; rec(pos + 1, ups, downs + 1, jumps, height - 1); }
        if (jumps < s) { w[pos] = 'J'; rec(pos + 1, ups, downs, jumps + 1, height - 1); }
      };
  rec(0, 0, 0, 0, 0);
  return out;
}

inline mpz_class binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline mpz_class catalan(long n) { return binomial(2 * n, n) / (n + 1); }

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// histogram of occurrence counts over S_n, by the cubic scan
inline std::vector<std::uint64_t> histogram(std::size_t n, const Values& tau) {
  std::vector<std::uint64_t> h;
  for_each_permutation(n, [&](const Values& rho) {
    const auto c = count(rho, tau);
    if (h.size() <= c) h.resize(c + 1, 0);
    ++h[c];
  });
  return h;
}

inline Values random_permutation(std::size_t n, std::mt19937& rng) {
  Values v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace oracle
