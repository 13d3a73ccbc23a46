#include "pathperm/lattice_path.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "pathperm/error.hpp"

namespace pathperm {

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      case 'J': steps.push_back(Step::JumpDown); break;
      default:
        throw Error(ErrorCode::InvalidInput,
                    "bad path character '" + std::string(1, text[i]) +
                        "' at offset " + std::to_string(i));
    }
  }
  return LatticePath(std::move(steps));
}

std::size_t LatticePath::down_steps() const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::Down));
}
std::size_t LatticePath::jump_steps() const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::JumpDown));
}
std::size_t LatticePath::up_steps() const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::Up));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

PathClass validate(const LatticePath& path) {
  long height = 0;
  std::size_t consumed = 0;
  for (Step s : path.steps()) {
    height += s == Step::Up ? 1 : -1;
    ++consumed;
    if (height < 0) {
      return {PathClass::Invalid,
              "height -1 after prefix " + std::to_string(consumed), consumed};
    }
  }
  if (height != 0) {
    return {PathClass::Invalid, "ends at height " + std::to_string(height), consumed};
  }
  return {path.jump_steps() == 0 ? PathClass::Dyck : PathClass::DyckWithJumps, {}, 0};
}

std::vector<DownStepInfo> down_step_heights(const LatticePath& path) {
  const auto cls = validate(path);
  if (cls.kind == PathClass::Invalid) {
    throw Error(ErrorCode::InvalidInput, "invalid path: " + cls.reason);
  }
  std::vector<DownStepInfo> out;
  int height = 0;
  std::optional<std::size_t> peak;
  Step prev = Step::Down;
  for (Step s : path.steps()) {
    if (s == Step::Up) {
      ++height;
    } else if (s == Step::JumpDown) {
      --height;
    } else {
      --height;
      const std::size_t index = out.size() + 1;
      if (prev == Step::Up) peak = index;
      out.push_back({index, height, peak});
    }
    prev = s;
  }
  return out;
}

std::vector<Jump> jumps(const LatticePath& path) {
  std::vector<Jump> out;
  const auto& steps = path.steps();
  std::size_t downs = 0;
  for (std::size_t i = 0; i < steps.size();) {
    if (steps[i] == Step::Down) ++downs;
    if (steps[i] != Step::JumpDown) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < steps.size() && steps[j] == Step::JumpDown) ++j;
    out.push_back({downs, j - i, i});
    i = j;
  }
  return out;
}

bool is_psi_shaped(const LatticePath& path) {
  const auto& steps = path.steps();
  for (const auto& jump : jumps(path)) {
    const auto before = jump.step_index;
    const auto after = jump.step_index + jump.depth;
    if (before == 0 || steps[before - 1] != Step::Down) return false;
    if (after >= steps.size() || steps[after] != Step::Down) return false;
  }
  return true;
}

mpz_class count_paths(std::size_t n, std::size_t s) {
  // memo over (ups left, downs left, jumps left); height follows from them
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, mpz_class> memo;
  const long total_up = static_cast<long>(n + s);
  auto rec = [&](auto&& self, std::size_t u, std::size_t d, std::size_t j) -> mpz_class {
    const long height = (total_up - static_cast<long>(u)) -
                        (static_cast<long>(n) - static_cast<long>(d)) -
                        (static_cast<long>(s) - static_cast<long>(j));
    if (height < 0) return 0;
    if (u == 0 && d == 0 && j == 0) return height == 0 ? 1 : 0;
    const auto key = std::make_tuple(u, d, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class total = 0;
    if (u > 0) total += self(self, u - 1, d, j);
    if (d > 0) total += self(self, u, d - 1, j);
    if (j > 0) total += self(self, u, d, j - 1);
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, n + s, n, s);
}

mpz_class count_partial_paths(std::size_t from, std::size_t to, std::size_t downs) {
  if (to + downs < from) return 0;
  const std::size_t ups = to + downs - from;
  const std::size_t top = from + ups;
  std::vector<mpz_class> ways(top + 2, 0);
  ways[from] = 1;
  for (std::size_t step = 0; step < ups + downs; ++step) {
    std::vector<mpz_class> next(top + 2, 0);
    for (std::size_t h = 0; h <= top; ++h) {
      if (ways[h] == 0) continue;
      next[h + 1] += ways[h];
      if (h > 0) next[h - 1] += ways[h];
    }
    ways = std::move(next);
  }
  return ways[to];
}

std::size_t weight_exponent(const LatticePath& path) {
  return path.up_steps() + path.down_steps();
}

namespace {

// Row of each step (its lower height) and column; jumps share no column with
// their neighbours so every step gets its own column.
struct Layout {
  std::vector<int> rows;
  int max_row = -1;
};

Layout layout(const LatticePath& path) {
  Layout out;
  int h = 0;
  for (Step s : path.steps()) {
    const int row = s == Step::Up ? h : h - 1;
    h += s == Step::Up ? 1 : -1;
    out.rows.push_back(row);
    out.max_row = std::max(out.max_row, row);
  }
  return out;
}

}  // namespace

std::string render_ascii(const LatticePath& path) {
  const auto lay = layout(path);
  const auto& steps = path.steps();
  std::string out;
  for (int row = lay.max_row; row >= 0; --row) {
    std::string line(steps.size(), ' ');
    for (std::size_t c = 0; c < steps.size(); ++c) {
      if (lay.rows[c] != row) continue;
      line[c] = steps[c] == Step::Up ? '/' : steps[c] == Step::Down ? '\\' : '|';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const LatticePath& path, int cell) {
  const auto lay = layout(path);
  int x = 0, y = 0;
  const int height = std::max(lay.max_row + 1, 1);
  const int width = std::max<int>(static_cast<int>(path.length() - path.jump_steps()), 1);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (width + 2) * cell
      << "\" height=\"" << (height + 2) * cell << "\">\n";
  const auto px = [&](int gx) { return (gx + 1) * cell; };
  const auto py = [&](int gy) { return (height + 1 - gy) * cell; };
  svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(width)
      << "\" y2=\"" << py(0) << "\" stroke=\"#999\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\""
      << px(x) << ',' << py(y);
  for (Step s : path.steps()) {
    if (s == Step::Up) { ++x; ++y; }
    else if (s == Step::Down) { ++x; --y; }
    else { --y; }
    svg << ' ' << px(x) << ',' << py(y);
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace pathperm
