#include "pathperm/bijections.hpp"

#include <algorithm>

#include "pathperm/error.hpp"

namespace pathperm {

const Permutation& as_permutation(Pattern p) {
  return p == Pattern::P312 ? pattern_312() : pattern_321();
}

Pattern parse_pattern(std::string_view text) {
  if (text == "312" || text == "3,1,2") return Pattern::P312;
  if (text == "321" || text == "3,2,1") return Pattern::P321;
  throw Error(ErrorCode::UnsupportedPattern,
              "pattern must be 312 or 321, got '" + std::string(text) + "'");
}

const char* pattern_name(Pattern p) { return p == Pattern::P312 ? "312" : "321"; }

LatticePath translate_heights(const HeightVector& heights) {
  std::vector<Step> steps;
  int current = 0;
  for (int h : heights.heights) {
    const int target = h + 1;
    for (; current < target; ++current) steps.push_back(Step::Up);
    for (; current > target; --current) steps.push_back(Step::JumpDown);
    steps.push_back(Step::Down);
    current = h;
  }
  return LatticePath(std::move(steps));
}

LatticePath psi_avoiding(const Permutation& rho) {
  const auto n = rho.size();
  HeightVector h{std::vector<int>(n, 0)};
  std::size_t last_max = 0;
  int last_height = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (is_left_to_right_maximum(rho, i)) {
      last_max = i;
      last_height = 0;
      for (std::size_t k = i + 1; k <= n; ++k) last_height += rho.at(k) < rho.at(i);
      h.heights[i - 1] = last_height;
    } else {
      h.heights[i - 1] = last_height - static_cast<int>(i - last_max);
    }
  }
  return translate_heights(h);
}

LatticePath psi_avoiding_staircase(const Permutation& rho) {
  std::vector<Step> steps;
  int running = 0;
  for (int v : rho.values()) {
    for (; running < v; ++running) steps.push_back(Step::Up);
    steps.push_back(Step::Down);
  }
  return LatticePath(std::move(steps));
}

LatticePath psi312(const Permutation& rho) { return translate_heights(heights_312(rho)); }
LatticePath psi321(const Permutation& rho) { return translate_heights(heights_321(rho)); }

LatticePath psi(const Permutation& rho, Pattern tau) {
  return tau == Pattern::P312 ? psi312(rho) : psi321(rho);
}

namespace {

// Running maximum before each down-step of a jump-free Dyck path, i.e. the
// value of the preceding left-to-right maximum for every column.
std::vector<int> running_maxima(const LatticePath& path) {
  const auto cls = validate(path);
  if (cls.kind == PathClass::Invalid) {
    throw Error(ErrorCode::InvalidInput, "invalid path: " + cls.reason);
  }
  if (cls.kind == PathClass::DyckWithJumps) {
    throw Error(ErrorCode::UnsupportedInput, "path has down-jumps");
  }
  std::vector<int> out;
  int ups = 0;
  for (Step s : path.steps()) {
    if (s == Step::Up) ++ups;
    else out.push_back(ups);
  }
  return out;
}

template <typename Pick>
Permutation fill_remaining(const LatticePath& path, Pick pick) {
  const auto maxima = running_maxima(path);
  const auto n = maxima.size();
  std::vector<bool> used(n + 1, false);
  std::vector<int> values(n, 0);
  int prev = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (maxima[x] > prev) {
      values[x] = maxima[x];
      used[static_cast<std::size_t>(maxima[x])] = true;
      prev = maxima[x];
    }
  }
  prev = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (maxima[x] > prev) {
      prev = maxima[x];
      continue;
    }
    const int v = pick(used, prev);
    used[static_cast<std::size_t>(v)] = true;
    values[x] = v;
  }
  return Permutation(std::move(values));
}

}  // namespace

Permutation decode_321_avoiding(const LatticePath& path) {
  // left-most empty column gets the lowest empty row
  return fill_remaining(path, [](const std::vector<bool>& used, int) {
    int v = 1;
    while (used[static_cast<std::size_t>(v)]) ++v;
    return v;
  });
}

Permutation decode_312_avoiding(const LatticePath& path) {
  // left-most empty column gets the highest empty row below its maximum
  return fill_remaining(path, [](const std::vector<bool>& used, int below) {
    int v = below - 1;
    while (used[static_cast<std::size_t>(v)]) --v;
    return v;
  });
}

Permutation decode_psi312(const LatticePath& path) {
  const auto cls = validate(path);
  if (cls.kind == PathClass::Invalid) {
    throw Error(ErrorCode::InvalidInput, "invalid path: " + cls.reason);
  }
  if (!is_psi_shaped(path)) {
    throw Error(ErrorCode::NotInImage, "a jump is not sandwiched by down-steps");
  }
  const auto infos = down_step_heights(path);
  const auto n = infos.size();
  std::vector<int> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<int>(i + 1);
  std::vector<int> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = static_cast<std::size_t>(infos[i].height);
    if (h > n - i - 1) {
      throw Error(ErrorCode::NotInImage,
                  "height " + std::to_string(h) + " of down-step " +
                      std::to_string(i + 1) + " exceeds the entries to its right");
    }
    values.push_back(remaining[h]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(h));
  }
  Permutation rho(std::move(values));
  if (psi312(rho) != path) {
    throw Error(ErrorCode::NotInImage, "path is not the image of its height vector");
  }
  return rho;
}

std::optional<Permutation> search_psi321_preimage(const LatticePath& path) {
  const auto cls = validate(path);
  if (cls.kind == PathClass::Invalid) return std::nullopt;
  const auto n = path.down_steps();
  if (n > 10) {
    throw Error(ErrorCode::ResourceGuard, "preimage search limited to n <= 10");
  }
  std::vector<int> target;
  for (const auto& info : down_step_heights(path)) target.push_back(info.height);
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<int>(i + 1);
  do {
    Permutation rho(values);
    if (heights_321(rho).heights == target && psi321(rho) == path) return rho;
  } while (std::next_permutation(values.begin(), values.end()));
  return std::nullopt;
}

namespace {

std::size_t preceding_maximum(const Permutation& rho, std::size_t i) {
  std::size_t best = 1;
  for (std::size_t j = 1; j <= i; ++j) {
    if (rho.at(j) > rho.at(best)) best = j;
  }
  return best;
}

}  // namespace

std::vector<JumpContext> analyze_jumps(const Permutation& rho, Pattern tau) {
  const auto path = psi(rho, tau);
  const auto heights = tau == Pattern::P312 ? heights_312(rho) : heights_321(rho);
  const auto& steps = path.steps();
  const auto n = rho.size();

  std::vector<std::size_t> down_at;  // step index of each down-step
  for (std::size_t s = 0; s < steps.size(); ++s) {
    if (steps[s] == Step::Down) down_at.push_back(s);
  }
  const auto maxima = left_to_right_maxima(rho);
  const auto is_max = [&](std::size_t pos) {
    return std::binary_search(maxima.begin(), maxima.end(), pos);
  };

  std::vector<JumpContext> out;
  for (const auto& jump : jumps(path)) {
    JumpContext ctx;
    ctx.jump = jump;
    ctx.first = out.empty();
    const std::size_t i = jump.position;
    const std::size_t d = jump.depth;
    for (auto s = jump.step_index + d; s < steps.size() && steps[s] == Step::Down; ++s) ++ctx.l;
    for (auto s = jump.step_index; s > 0 && steps[s - 1] == Step::Down; --s) ++ctx.m;
    const std::size_t l = ctx.l, m = ctx.m;
    if (i == 0 || l == 0) {
      // not sandwiched; only possible for hand-built paths
      out.push_back(std::move(ctx));
      continue;
    }
    ctx.preceding_maximum = preceding_maximum(rho, i);
    ctx.run_starts_at_maximum = m > 0 && is_max(i - m + 1);

    // entries right of the jump that cause it
    std::vector<std::size_t> candidates;
    for (std::size_t k = i + 1; k <= n; ++k) {
      const int v = rho.at(k);
      const bool hit = tau == Pattern::P312 ? (v > rho.at(i + 1) && v < rho.at(i))
                                            : v < rho.at(i + 1);
      if (hit) candidates.push_back(k);
    }
    ctx.causing_candidates = candidates.size();
    if (candidates.size() > d) {
      // keep the d largest values, the ones closest below the entry after the jump
      std::sort(candidates.begin(), candidates.end(),
                [&](auto a, auto b) { return rho.at(a) > rho.at(b); });
      candidates.resize(d);
      std::sort(candidates.begin(), candidates.end());
    }
    ctx.causing = candidates;

    auto& pred = ctx.prediction;
    const auto add_triples = [&](std::size_t first_pos, std::size_t downs_after) {
      for (std::size_t j = 1; j <= downs_after; ++j) {
        for (auto k : ctx.causing) {
          pred.triples.insert({rho.at(first_pos), rho.at(i + j), rho.at(k)});
        }
      }
    };

    pred.base = d * l;
    add_triples(ctx.preceding_maximum, l);

    if (tau == Pattern::P312) {
      pred.before_downs = m * d * l;
      for (std::size_t g = 1; g <= m; ++g) add_triples(i - g + 1, l);
      const std::size_t run_start = i - m + 1;
      for (auto pos : maxima) {
        if (pos >= run_start) break;
        int ups = 0;
        for (auto s = down_at[pos - 1] + 1; s < jump.step_index; ++s) ups += steps[s] == Step::Up;
        int peaks = 0;
        for (auto q : maxima) peaks += q > pos && q <= i;
        ctx.maxima_before.push_back({pos, rho.at(pos), heights.at(pos), ups - peaks});
      }
      // smallest index x with s_x < m, then sum over x..r
      std::size_t x = ctx.maxima_before.size();
      for (std::size_t g = 0; g < ctx.maxima_before.size(); ++g) {
        if (ctx.maxima_before[g].between < static_cast<int>(m)) {
          x = g;
          break;
        }
      }
      for (std::size_t g = x; g < ctx.maxima_before.size(); ++g) {
        const auto& rec = ctx.maxima_before[g];
        const auto gap = static_cast<std::int64_t>(m) - rec.between;
        if (gap <= 0) continue;
        pred.maxima_sum += d * l * static_cast<std::uint64_t>(gap);
        add_triples(rec.position, l);
      }
      pred.total = pred.before_downs + pred.maxima_sum;
    } else {
      for (auto pos : maxima) {
        if (pos > i) break;
        int non_max = 0;
        for (std::size_t q = pos + 1; q <= i; ++q) non_max += !is_max(q);
        ctx.maxima_before.push_back({pos, rho.at(pos), heights.at(pos), non_max});
      }
      if (ctx.first) {
        pred.triples.clear();
        std::size_t x = ctx.maxima_before.size();
        for (std::size_t g = 0; g < ctx.maxima_before.size(); ++g) {
          const auto& rec = ctx.maxima_before[g];
          if (rec.height - static_cast<int>(d) - rec.between > 0) {
            x = g;
            break;
          }
        }
        for (std::size_t g = x; g < ctx.maxima_before.size(); ++g) {
          const auto& rec = ctx.maxima_before[g];
          const auto room = std::min<std::int64_t>(
              rec.height - static_cast<std::int64_t>(d) - rec.between,
              static_cast<std::int64_t>(l));
          if (room <= 0) continue;
          pred.maxima_sum += d * static_cast<std::uint64_t>(room);
          add_triples(rec.position, static_cast<std::size_t>(room));
        }
        pred.total = pred.maxima_sum;
      } else {
        pred.total = pred.base;
      }
    }
    out.push_back(std::move(ctx));
  }
  return out;
}

bool check_jumpsum(const Permutation& rho, Pattern tau) {
  const auto jumps_count = psi(rho, tau).jump_steps();
  const auto occ = count_occurrences_fast(rho, as_permutation(tau));
  return jumps_count <= occ && ((jumps_count == 0) == (occ == 0));
}

bool has_single_occurrence_shape_312(const LatticePath& path) {
  const auto js = jumps(path);
  if (js.size() != 1 || js[0].depth != 1) return false;
  const auto& steps = path.steps();
  const auto at = js[0].step_index;
  if (at < 3 || at + 2 >= steps.size()) return false;
  return steps[at - 3] == Step::Up && steps[at - 2] == Step::Up &&
         steps[at - 1] == Step::Down && steps[at + 1] == Step::Down &&
         steps[at + 2] == Step::Up;
}

}  // namespace pathperm
