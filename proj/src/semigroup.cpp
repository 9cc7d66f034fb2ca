#include "cst/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cst {

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> table,
                                 std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ <= 0) throw ValidationError("order must be positive");
  if (static_cast<int>(table_.size()) != order_ * order_)
    throw ValidationError("table size does not match order");
  for (int v : table_)
    if (v < 0 || v >= order_)
      throw BoundsError("table entry out of range [0," + std::to_string(order_) + ")");
  if (!names_.empty()) {
    if (static_cast<int>(names_.size()) != order_)
      throw ValidationError("name count does not match order");
    for (int i = 0; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j)
        if (names_[i] == names_[j])
          throw ValidationError("duplicate element name '" + names_[i] + "'");
  }
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      for (int z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          throw ValidationError("not associative: (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) +
                                ")");
  identity_.reset();
  for (int e = 0; e < order_; ++e) {
    bool is_id = true;
    for (int x = 0; x < order_ && is_id; ++x)
      is_id = mul(e, x) == x && mul(x, e) == x;
    if (is_id) {
      identity_ = e;  // a two-sided identity is unique
      break;
    }
  }
  commutative_ = true;
  for (int x = 0; x < order_ && commutative_; ++x)
    for (int y = x + 1; y < order_ && commutative_; ++y)
      commutative_ = mul(x, y) == mul(y, x);
}

int FiniteSemigroup::mul_word(const std::vector<int>& word) const {
  if (word.empty()) throw PreconditionError("empty word has no product");
  int acc = word[0];
  for (size_t i = 1; i < word.size(); ++i) acc = mul(acc, word[i]);
  return acc;
}

std::string FiniteSemigroup::label(int x) const {
  if (x < 0 || x >= order_) throw BoundsError("element index out of range");
  return has_names() ? names_[x] : std::to_string(x);
}

int FiniteSemigroup::resolve(const std::string& token) const {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i)
    if (names_[i] == token) return i;
  try {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos == token.size() && v >= 0 && v < order_) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("unknown element '" + token + "'");
}

ValidationReport FiniteSemigroup::report() const {
  // Construction already validated, so this is always a success report.
  ValidationReport r;
  r.associative = true;
  r.identity = identity_;
  r.commutative = commutative_;
  return r;
}

FiniteSemigroup FiniteSemigroup::restrict_to(const ElementSet& closed_subset,
                                             std::vector<int>& sub_to_parent) const {
  if (closed_subset.empty())
    throw PreconditionError("cannot restrict to the empty set");
  sub_to_parent = closed_subset.members();
  std::vector<int> parent_to_sub(order_, -1);
  for (int i = 0; i < static_cast<int>(sub_to_parent.size()); ++i)
    parent_to_sub[sub_to_parent[i]] = i;
  int m = static_cast<int>(sub_to_parent.size());
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = mul(sub_to_parent[i], sub_to_parent[j]);
      if (parent_to_sub[p] < 0)
        throw PreconditionError("subset is not multiplicatively closed");
      table[i * m + j] = parent_to_sub[p];
    }
  return FiniteSemigroup(m, std::move(table));
}

// --- parsing ----------------------------------------------------------------

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

FiniteSemigroup parse_semigroup(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int order = -1;
  std::vector<int> table;
  std::vector<std::string> names;
  int rows_read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    if (order < 0) {
      if (!(ls >> order) || order <= 0)
        throw ParseError("expected positive order", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after order", lineno);
      continue;
    }
    if (rows_read < order) {
      int v;
      int cols = 0;
      while (ls >> v) {
        table.push_back(v);
        ++cols;
      }
      if (!ls.eof()) throw ParseError("non-integer table entry", lineno);
      if (cols != order)
        throw ParseError("expected " + std::to_string(order) + " entries, got " +
                             std::to_string(cols),
                         lineno);
      ++rows_read;
      continue;
    }
    std::string key;
    ls >> key;
    if (key == "names:") {
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      if (static_cast<int>(names.size()) != order)
        throw ParseError("expected " + std::to_string(order) + " names", lineno);
      continue;
    }
    throw ParseError("unexpected content after table", lineno);
  }
  if (order < 0) throw ParseError("empty input: no order line");
  if (rows_read != order)
    throw ParseError("expected " + std::to_string(order) + " table rows, got " +
                     std::to_string(rows_read));
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= order)
      throw ParseError("table entry " + std::to_string(table[i]) +
                       " out of range [0," + std::to_string(order) + ")");
  return FiniteSemigroup(order, std::move(table), std::move(names));
}

FiniteSemigroup load_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semigroup(buf.str());
}

ElementSet parse_subset(const std::string& literal, const FiniteSemigroup& s) {
  ElementSet out(s.order());
  std::string tok;
  std::istringstream in(literal);
  while (std::getline(in, tok, ',')) {
    // trim
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.insert(s.resolve(tok.substr(a, b - a + 1)));
  }
  return out;
}

std::string format_subset(const ElementSet& a, const FiniteSemigroup* s) {
  std::string out;
  for (int x : a.members()) {
    if (!out.empty()) out += ",";
    out += s ? s->label(x) : std::to_string(x);
  }
  return out;
}

// --- translate preimages ----------------------------------------------------

ElementSet translate_preimage(const FiniteSemigroup& s, const ElementSet& b,
                              const ElementSet& a) {
  if (b.universe() != s.order() || a.universe() != s.order())
    throw PreconditionError("universe mismatch with semigroup order");
  ElementSet out(s.order());
  for (int t : b.members())
    for (int y = 0; y < s.order(); ++y)
      if (a.contains(s.mul(t, y))) out.insert(y);
  return out;
}

// --- subgroup test ----------------------------------------------------------

SubgroupCertificate is_subgroup(const FiniteSemigroup& s, const ElementSet& g,
                                bool require_normal) {
  SubgroupCertificate cert;
  if (g.universe() != s.order())
    throw PreconditionError("universe mismatch with semigroup order");
  if (g.empty()) {
    cert.reason = "empty set";
    return cert;
  }
  auto mem = g.members();
  for (int x : mem)
    for (int y : mem)
      if (!g.contains(s.mul(x, y))) {
        cert.reason = "not closed: " + std::to_string(x) + "*" +
                      std::to_string(y) + " outside G";
        return cert;
      }
  std::optional<int> e;
  for (int c : mem) {
    bool ok = true;
    for (int x : mem) ok = ok && s.mul(c, x) == x && s.mul(x, c) == x;
    if (ok) {
      e = c;
      break;
    }
  }
  if (!e) {
    cert.reason = "no identity element in G";
    return cert;
  }
  std::vector<int> inverses;
  for (int x : mem) {
    int inv = -1;
    for (int y : mem)
      if (s.mul(x, y) == *e && s.mul(y, x) == *e) {
        inv = y;
        break;
      }
    if (inv < 0) {
      cert.reason = "element " + std::to_string(x) + " has no inverse in G";
      return cert;
    }
    inverses.push_back(inv);
  }
  if (require_normal) {
    auto ambient = is_subgroup(s, s.full_set(), false);
    if (!ambient.ok)
      throw PreconditionError(
          "normality check requires the ambient semigroup to be a group");
    auto amb_members = s.full_set().members();
    for (int t = 0; t < s.order(); ++t) {
      int tinv = ambient.inverses[t];  // members() of the full set is 0..n-1
      for (int x : mem)
        if (!g.contains(s.mul(s.mul(t, x), tinv))) {
          cert.reason = "not normal: conjugation by " + std::to_string(t) +
                        " escapes G";
          return cert;
        }
    }
    (void)amb_members;
  }
  cert.ok = true;
  cert.identity = e;
  cert.inverses = std::move(inverses);
  return cert;
}

// --- enumeration and corpus -------------------------------------------------

void enumerate_semigroups(int order,
                          const std::function<void(const FiniteSemigroup&)>& fn) {
  if (order < 1 || order > 3)
    throw PreconditionError(
        "enumeration is capped at order 3; use the bundled corpus for larger "
        "orders");
  int cells = order * order;
  std::vector<int> table(cells, 0);
  // Odometer over all order^(order^2) tables; associativity filter.
  while (true) {
    bool assoc = true;
    for (int x = 0; x < order && assoc; ++x)
      for (int y = 0; y < order && assoc; ++y)
        for (int z = 0; z < order && assoc; ++z)
          assoc = table[table[x * order + y] * order + z] ==
                  table[x * order + table[y * order + z]];
    if (assoc) fn(FiniteSemigroup(order, table));
    int i = cells - 1;
    while (i >= 0 && table[i] == order - 1) table[i--] = 0;
    if (i < 0) break;
    ++table[i];
  }
}

long count_semigroups(int order) {
  long n = 0;
  enumerate_semigroups(order, [&](const FiniteSemigroup&) { ++n; });
  return n;
}

FiniteSemigroup right_zero_semigroup(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = y;
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup left_zero_semigroup(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = x;
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup cyclic_group(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = (x + y) % n;
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup zmod_multiplication(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = (x * y) % n;
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup rectangular_band(int a, int b) {
  // Elements are pairs (i,j), i<a, j<b; (i,j)*(k,l) = (i,l).
  int n = a * b;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = (x / b) * b + (y % b);
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup cyclic_monoid(int k, int m) {
  // <a : a^(k+m) = a^k>; element i represents a^i, i in [0, k+m).
  int n = k + m;
  auto norm = [&](int p) { return p < n ? p : k + (p - k) % m; };
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = norm(x + y);
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup full_transformation_monoid_2() {
  // Maps f: {0,1}->{0,1} encoded as 2*f(0)+f(1); composition (x*y)(p)=x(y(p)).
  auto apply = [](int f, int p) { return p == 0 ? f / 2 : f % 2; };
  std::vector<int> t(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int f0 = apply(x, apply(y, 0));
      int f1 = apply(x, apply(y, 1));
      t[x * 4 + y] = 2 * f0 + f1;
    }
  return FiniteSemigroup(4, std::move(t));
}

std::vector<std::pair<std::string, FiniteSemigroup>> bundled_corpus() {
  std::vector<std::pair<std::string, FiniteSemigroup>> out;
  for (int n = 2; n <= 6; ++n) {
    out.emplace_back("right-zero-" + std::to_string(n), right_zero_semigroup(n));
    out.emplace_back("left-zero-" + std::to_string(n), left_zero_semigroup(n));
    out.emplace_back("cyclic-group-" + std::to_string(n), cyclic_group(n));
    out.emplace_back("zmod-mul-" + std::to_string(n), zmod_multiplication(n));
  }
  out.emplace_back("rect-band-2x2", rectangular_band(2, 2));
  out.emplace_back("rect-band-2x3", rectangular_band(2, 3));
  out.emplace_back("rect-band-3x2", rectangular_band(3, 2));
  out.emplace_back("cyclic-monoid-2-3", cyclic_monoid(2, 3));
  out.emplace_back("cyclic-monoid-3-3", cyclic_monoid(3, 3));
  out.emplace_back("cyclic-monoid-1-4", cyclic_monoid(1, 4));
  out.emplace_back("full-transf-2", full_transformation_monoid_2());
  return out;
}

}  // namespace cst
