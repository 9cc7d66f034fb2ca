#include "cst/hales_jewett.hpp"

#include <algorithm>

namespace cst::hj {

std::vector<Word> line_points(const VariableWord& vw, int t) {
  bool has_star = false;
  for (int s : vw) {
    if (s == kStar) has_star = true;
    else if (s < 1 || s > t)
      throw PreconditionError("variable word symbol out of alphabet");
  }
  if (!has_star)
    throw PreconditionError("variable word must contain the variable");
  std::vector<Word> points;
  points.reserve(t);
  for (int letter = 1; letter <= t; ++letter) {
    Word w(vw.size());
    for (size_t i = 0; i < vw.size(); ++i)
      w[i] = vw[i] == kStar ? letter : vw[i];
    points.push_back(std::move(w));
  }
  return points;
}

void for_each_template(int n, int t,
                       const std::function<bool(const VariableWord&)>& fn) {
  // Odometer over symbols {0=*,1..t}^n in lexicographic order, skipping
  // star-free words.
  VariableWord vw(n, 0);
  while (true) {
    if (std::find(vw.begin(), vw.end(), kStar) != vw.end())
      if (fn(vw)) return;
    int i = n - 1;
    while (i >= 0 && vw[i] == t) vw[i--] = 0;
    if (i < 0) return;
    ++vw[i];
  }
}

long word_count(int n, int t) {
  long c = 1;
  for (int i = 0; i < n; ++i) c *= t;
  return c;
}

long template_count(int n, int t) {
  long a = 1, b = 1;
  for (int i = 0; i < n; ++i) {
    a *= t + 1;
    b *= t;
  }
  return a - b;
}

long word_index(const Word& w, int t) {
  long idx = 0;
  for (int letter : w) {
    if (letter < 1 || letter > t) throw PreconditionError("letter out of alphabet");
    idx = idx * t + (letter - 1);
  }
  return idx;
}

Word word_at(long index, int n, int t) {
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = static_cast<int>(index % t) + 1;
    index /= t;
  }
  return w;
}

std::optional<Line> find_mono_line(const Coloring& coloring, int n, int t) {
  std::optional<Line> found;
  for_each_template(n, t, [&](const VariableWord& vw) {
    auto points = line_points(vw, t);
    int c0 = coloring(points[0]);
    if (c0 < 0) throw PreconditionError("coloring must be total");
    for (size_t i = 1; i < points.size(); ++i) {
      int c = coloring(points[i]);
      if (c < 0) throw PreconditionError("coloring must be total");
      if (c != c0) return false;
    }
    found = Line{vw, std::move(points)};
    return true;
  });
  return found;
}

std::optional<DenseColoring> find_line_free_coloring(int r, int t, int n) {
  long words = word_count(n, t);
  // For each line, the point indices sorted ascending; grouped by the largest
  // point so constraints fire exactly when that point is being colored.
  std::vector<std::vector<std::vector<long>>> lines_by_max(words);
  for_each_template(n, t, [&](const VariableWord& vw) {
    std::vector<long> idx;
    for (const Word& p : line_points(vw, t)) idx.push_back(word_index(p, t));
    std::sort(idx.begin(), idx.end());
    long mx = idx.back();
    idx.pop_back();
    lines_by_max[mx].push_back(std::move(idx));
    return false;
  });

  DenseColoring color(words, -1);
  std::function<bool(long)> assign = [&](long p) -> bool {
    if (p == words) return true;
    // Color symmetry: the first point may be pinned to color 0.
    int cmax = p == 0 ? 1 : r;
    for (int c = 0; c < cmax; ++c) {
      bool blocked = false;
      for (const auto& rest : lines_by_max[p]) {
        bool mono = true;
        for (long q : rest)
          if (color[q] != c) {
            mono = false;
            break;
          }
        if (mono) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      color[p] = c;
      if (assign(p + 1)) return true;
      color[p] = -1;
    }
    return false;
  };
  if (assign(0)) return color;
  return std::nullopt;
}

HjResult hj_number(int r, int t, int max_n) {
  if (r < 1 || t < 1 || max_n < 1)
    throw PreconditionError("r, t, max_n must be >= 1");
  HjResult res;
  std::optional<DenseColoring> previous;
  int previous_n = 0;
  for (int n = 1; n <= max_n; ++n) {
    auto cert = find_line_free_coloring(r, t, n);
    if (!cert) {
      res.determined = true;
      res.value = n;
      if (previous) {
        res.certificate = std::move(previous);
        res.certificate_n = previous_n;
      }
      return res;
    }
    previous = std::move(cert);
    previous_n = n;
  }
  res.determined = false;
  res.value = max_n;
  res.certificate = std::move(previous);
  res.certificate_n = previous_n;
  return res;
}

}  // namespace cst::hj
