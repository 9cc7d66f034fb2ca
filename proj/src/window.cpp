#include "cst/window.hpp"

#include <sstream>

namespace cst {

WindowSet WindowSet::intersect(const WindowSet& other) const {
  if (w_ != other.w_) throw PreconditionError("window bound mismatch");
  WindowSet out(w_, generator_.empty() ? other.generator_
                                       : generator_ + " & " + other.generator_);
  for (long x = 1; x <= w_; ++x)
    if (in_[x] && other.in_[x]) out.insert(x);
  return out;
}

namespace {

long parse_long(const std::string& tok) {
  size_t pos = 0;
  long v = std::stol(tok, &pos);
  if (pos != tok.size()) throw ParseError("bad integer '" + tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, sep)) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(tok.substr(a, b - a + 1));
  }
  return out;
}

}  // namespace

WindowSet WindowSet::from_spec(long w, const std::string& spec) {
  WindowSet out(w, spec);
  if (spec.rfind("mod ", 0) == 0) {
    auto parts = split(spec.substr(4), ',');
    if (parts.size() != 2) throw ParseError("expected 'mod k,r'");
    long k = parse_long(parts[0]);
    long r = parse_long(parts[1]);
    if (k < 1 || r < 0 || r >= k) throw ParseError("bad residue class");
    for (long x = 1; x <= w; ++x)
      if (x % k == r) out.insert(x);
    return out;
  }
  if (spec.rfind("intervals ", 0) == 0) {
    for (const auto& part : split(spec.substr(10), ',')) {
      auto dash = part.find('-');
      if (dash == std::string::npos) throw ParseError("expected 'a-b' interval");
      long a = parse_long(part.substr(0, dash));
      long b = parse_long(part.substr(dash + 1));
      if (a > b) throw ParseError("empty interval '" + part + "'");
      for (long x = std::max(1L, a); x <= std::min(w, b); ++x) out.insert(x);
    }
    return out;
  }
  if (spec.rfind("list ", 0) == 0) {
    for (const auto& part : split(spec.substr(5), ',')) out.insert(parse_long(part));
    return out;
  }
  if (spec == "pow2blocks") return power_blocks(w);
  throw ParseError("unknown window set spec '" + spec + "'");
}

WindowSet WindowSet::power_blocks(long w) {
  WindowSet out(w, "pow2blocks");
  for (long n = 1;; ++n) {
    long lo = 1L << n;
    if (lo > w) break;
    for (long x = lo; x <= std::min(w, lo + n); ++x) out.insert(x);
  }
  return out;
}

WindowVerdicts classify_window(const WindowSet& a, long gap, long block) {
  long w = a.bound();
  if (gap > w || block > w) throw PreconditionError("gap and block must be <= W");
  WindowVerdicts out;
  std::string note = "window=[1," + std::to_string(w) + "]";

  // Syndetic within bounds: every x in [1, W-gap] sees a member within gap.
  out.syndetic.bounds = note + " gap=" + std::to_string(gap);
  out.syndetic.status = Status::Established;
  for (long x = 1; x + gap <= w; ++x) {
    bool hit = false;
    for (long d = 0; d <= gap && !hit; ++d) hit = a.contains(x + d);
    if (!hit) {
      out.syndetic.status = Status::RefutedWithinBounds;
      out.syndetic.witness = x;
      break;
    }
  }

  // Thick within bounds: a contained interval of the requested length.
  out.thick.bounds = note + " block=" + std::to_string(block);
  out.thick.status = Status::RefutedWithinBounds;
  long run = 0;
  for (long x = 1; x <= w; ++x) {
    run = a.contains(x) ? run + 1 : 0;
    if (run >= block) {
      out.thick.status = Status::Established;
      out.thick.witness = x - block + 1;
      break;
    }
  }

  // Piecewise syndetic within bounds: some g-fattening contains a block.
  out.pws.bounds = note + " gap=" + std::to_string(gap) +
                   " block=" + std::to_string(block);
  out.pws.status = Status::RefutedWithinBounds;
  for (long g = 0; g <= gap && !out.pws.established(); ++g) {
    long fat_run = 0;
    for (long x = 1; x <= w; ++x) {
      bool in_fat = false;
      for (long t = 0; t <= g && !in_fat; ++t) in_fat = a.contains(x + t);
      fat_run = in_fat ? fat_run + 1 : 0;
      if (fat_run >= block) {
        out.pws.status = Status::Established;
        out.pws.witness = std::make_pair(g, x - block + 1);
        break;
      }
    }
  }
  return out;
}

std::set<long> fs_window(const std::vector<long>& x, int from, int to) {
  int n = static_cast<int>(x.size());
  if (from < 1 || from > to || to > n) throw BoundsError("fs_window range out of bounds");
  std::set<long> out;
  int width = to - from + 1;
  if (width > 30) throw ResourceError("fs_window range too wide");
  for (unsigned long mask = 1; mask < (1ul << width); ++mask) {
    long sum = 0;
    for (int i = 0; i < width; ++i)
      if (mask & (1ul << i)) sum += x[from - 1 + i];
    out.insert(sum);
  }
  return out;
}

namespace {

// Evaluates sum_{n in F} (a_n + sum_{t in H_n} y_t) for one sequence; returns
// nullopt when an index is out of range.
std::optional<long> chain_sum(const std::vector<long>& y,
                              const std::vector<long>& a,
                              const std::vector<std::vector<int>>& h,
                              const std::vector<int>& f_subset) {
  long total = 0;
  for (int n : f_subset) {
    total += a[n - 1];
    for (int t : h[n - 1]) {
      if (t < 1 || t > static_cast<int>(y.size())) return std::nullopt;
      total += y[t - 1];
    }
  }
  return total;
}

}  // namespace

bool verify_cst_chain(const WindowSet& a, const std::vector<std::vector<long>>& ys,
                      int depth, const CstWitnessChain& chain) {
  if (static_cast<int>(chain.a.size()) != depth) return false;
  if (static_cast<int>(chain.h.size()) != depth) return false;
  for (int i = 0; i < depth; ++i) {
    if (chain.h[i].empty()) return false;
    for (size_t j = 1; j < chain.h[i].size(); ++j)
      if (chain.h[i][j] <= chain.h[i][j - 1]) return false;
    if (i > 0 && chain.h[i].front() <= chain.h[i - 1].back()) return false;
  }
  for (unsigned mask = 1; mask < (1u << depth); ++mask) {
    std::vector<int> f;
    for (int n = 1; n <= depth; ++n)
      if (mask & (1u << (n - 1))) f.push_back(n);
    for (const auto& y : ys) {
      auto s = chain_sum(y, chain.a, chain.h, f);
      if (!s || !a.contains(*s)) return false;
    }
  }
  return true;
}

Verdict<CstWitnessChain> cst_witness_commutative(
    const WindowSet& a, const std::vector<std::vector<long>>& ys, int depth,
    const CstSearchBounds& bounds) {
  if (depth < 1) throw PreconditionError("depth must be >= 1");
  if (ys.empty()) throw PreconditionError("need at least one sequence");
  for (const auto& y : ys)
    if (static_cast<int>(y.size()) < bounds.t_max)
      throw PreconditionError("sequences must cover indices up to t_max");

  Verdict<CstWitnessChain> verdict;
  verdict.bounds = "t_max=" + std::to_string(bounds.t_max) +
                   " a_max=" + std::to_string(bounds.a_max) +
                   " h_size_max=" + std::to_string(bounds.h_size_max);

  CstWitnessChain chain;
  // Checks every F subset of [1, level] that contains the newest level; older
  // subsets were validated when their level was placed.
  auto level_ok = [&](int level) {
    for (unsigned mask = 1; mask < (1u << level); ++mask) {
      if (!(mask & (1u << (level - 1)))) continue;
      std::vector<int> f;
      for (int n = 1; n <= level; ++n)
        if (mask & (1u << (n - 1))) f.push_back(n);
      for (const auto& y : ys) {
        auto s = chain_sum(y, chain.a, chain.h, f);
        if (!s || !a.contains(*s)) return false;
      }
    }
    return true;
  };

  std::function<bool(int, int)> place = [&](int level, int min_index) -> bool {
    if (level > depth) return true;
    for (int hsize = 1; hsize <= bounds.h_size_max; ++hsize) {
      bool found = for_each_increasing_tuple(
          hsize, min_index, bounds.t_max, [&](const std::vector<int>& h) {
            for (long av = 1; av <= bounds.a_max; ++av) {
              chain.a.push_back(av);
              chain.h.push_back(h);
              if (level_ok(level) && place(level + 1, h.back() + 1)) return true;
              chain.a.pop_back();
              chain.h.pop_back();
            }
            return false;
          });
      if (found) return true;
    }
    return false;
  };

  if (place(1, 1)) {
    if (!verify_cst_chain(a, ys, depth, chain))
      throw InvariantViolation("CST chain failed its own re-verification");
    verdict.status = Status::Established;
    verdict.witness = std::move(chain);
  } else {
    verdict.status = Status::RefutedWithinBounds;
  }
  return verdict;
}

}  // namespace cst
