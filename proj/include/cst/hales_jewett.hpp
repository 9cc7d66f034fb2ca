#ifndef CST_HALES_JEWETT_HPP_
#define CST_HALES_JEWETT_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "cst/errors.hpp"

namespace cst::hj {

// A word of length N over the alphabet [t] = {1..t}.
using Word = std::vector<int>;

// A variable word: symbols over [t] plus the variable, encoded as 0; the
// variable occurs at least once.
using VariableWord = std::vector<int>;
constexpr int kStar = 0;

struct Line {
  VariableWord tmpl;
  std::vector<Word> points;  // t points, pairwise distinct
};

// The t words obtained by substituting 1..t at every variable position
// simultaneously.
std::vector<Word> line_points(const VariableWord& vw, int t);

// Total r-coloring of [t]^N; must return a color in [0, r) for every word.
using Coloring = std::function<int(const Word&)>;

// First monochromatic line in lexicographic template order (the variable
// sorts before every letter), or nullopt when the coloring is line-free.
std::optional<Line> find_mono_line(const Coloring& coloring, int n, int t);

// Enumerates templates in the same order as find_mono_line.
void for_each_template(int n, int t,
                       const std::function<bool(const VariableWord&)>& fn);

long word_count(int n, int t);      // t^N
long template_count(int n, int t);  // (t+1)^N - t^N

// Colorings are stored dense, indexed by the word's base-t encoding.
using DenseColoring = std::vector<int>;
long word_index(const Word& w, int t);
Word word_at(long index, int n, int t);

struct HjResult {
  bool determined = false;  // true: value is HJ(r,t); false: HJ(r,t) > max_n
  int value = 0;            // the HJ number, or the max_n that was searched
  // A line-free coloring certificate: at value-1 when determined (absent for
  // value 1), at max_n otherwise.
  std::optional<DenseColoring> certificate;
  int certificate_n = 0;
};

// Least N <= max_n such that no r-coloring of [t]^N avoids a monochromatic
// line, established by a backtracking line-free-coloring search, or the
// verdict HJ(r,t) > max_n with a line-free certificate at max_n.
HjResult hj_number(int r, int t, int max_n);

// Backtracking search for a line-free r-coloring of [t]^N.
std::optional<DenseColoring> find_line_free_coloring(int r, int t, int n);

}  // namespace cst::hj

#endif  // CST_HALES_JEWETT_HPP_
