// cstk: command-line front end for the finite central-sets toolkit.
//
// Exit codes: 0 success, 1 property refuted, 2 usage or input error,
// 3 precondition error, 4 resource cap hit.
//
// All stdout payloads are line-oriented "key: value" text with subset
// literals; nothing nondeterministic is ever printed.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cst/filter.hpp"
#include "cst/hales_jewett.hpp"
#include "cst/homomorphism.hpp"
#include "cst/ideal.hpp"
#include "cst/largeness.hpp"
#include "cst/semigroup.hpp"
#include "cst/window.hpp"
#include "cst/witness.hpp"

namespace {

using namespace cst;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kPrecondition = 3;
constexpr int kResource = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// LARGENESS_SEARCH_CAP overrides default search bounds globally.
int search_cap(int fallback) {
  const char* v = std::getenv("LARGENESS_SEARCH_CAP");
  if (!v || !*v) return fallback;
  try {
    int n = std::stoi(v);
    if (n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw ParseError("LARGENESS_SEARCH_CAP must be a positive integer");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& tok : split(s, ',')) {
    std::string t = trim(tok);
    if (t.empty()) continue;
    try {
      out.push_back(std::stol(t));
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + t);
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (long v : parse_longs(s)) out.push_back(static_cast<int>(v));
  return out;
}

// Family file: one sequence per line, comma-separated element indices or
// names; '#' comments allowed; all lines equal length.
SequenceFamily parse_family(const std::string& text, const FiniteSemigroup& s) {
  std::vector<std::vector<int>> seqs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<int> seq;
    for (const auto& tok : split(t, ','))
      seq.push_back(s.resolve(trim(tok)));
    seqs.push_back(std::move(seq));
  }
  if (seqs.empty()) throw ParseError("family file has no sequences");
  return SequenceFamily(seqs);
}

// Families file for cst: each block of consecutive sequence lines is one
// family; blank lines (or a "--" line) separate families.
std::vector<SequenceFamily> parse_families(const std::string& text,
                                           const FiniteSemigroup& s) {
  std::vector<SequenceFamily> out;
  std::vector<std::vector<int>> block;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back(SequenceFamily(block));
      block.clear();
    }
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t == "--") {
      flush();
      continue;
    }
    if (t[0] == '#') continue;
    std::vector<int> seq;
    for (const auto& tok : split(t, ','))
      seq.push_back(s.resolve(trim(tok)));
    block.push_back(std::move(seq));
  }
  flush();
  if (out.empty()) throw ParseError("families file has no sequences");
  return out;
}

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// Word slots joined with ';' (one slot may be empty).
std::string format_slots(const std::vector<std::vector<int>>& slots) {
  std::string out;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ";";
    for (size_t j = 0; j < slots[i].size(); ++j) {
      if (j) out += " ";
      out += std::to_string(slots[i][j]);
    }
  }
  return out;
}

std::vector<std::vector<int>> parse_slots(const std::string& s) {
  std::vector<std::vector<int>> out;
  for (const auto& part : split(s, ';')) {
    std::vector<int> word;
    std::istringstream in(part);
    int v;
    while (in >> v) word.push_back(v);
    out.push_back(std::move(word));
  }
  return out;
}

std::string verdict_line(Status st) { return to_string(st); }

// --- witness file (cst-witness v1) -------------------------------------------

void write_cst_witness(std::ostream& out, const FiniteSemigroup& s,
                       const CstWitnessMap& map) {
  out << "cst-witness v1\n";
  out << "order: " << s.order() << "\n";
  out << "target: " << format_subset(map.target, &s) << "\n";
  out << "idempotent: " << map.idempotent << "\n";
  out << "families: " << map.families.size() << "\n";
  for (size_t i = 0; i < map.families.size(); ++i) {
    const auto& fam = map.families[i];
    out << "family " << (i + 1) << " seqs: " << fam.size() << "\n";
    for (int j = 0; j < fam.size(); ++j)
      out << "family " << (i + 1) << " seq " << (j + 1) << ": "
          << join_ints(fam.sequences[j]) << "\n";
  }
  out << "entries: " << map.entries.size() << "\n";
  for (size_t i = 0; i < map.entries.size(); ++i) {
    const auto& e = map.entries[i];
    std::string p = "entry " + std::to_string(i + 1) + " ";
    out << p << "subset: " << join_ints(e.subset) << "\n";
    out << p << "m: " << e.m << "\n";
    out << p << "alpha: " << format_slots(e.alpha) << "\n";
    out << p << "tau: " << join_ints(e.tau.t) << "\n";
  }
}

// Line-by-line reader with strict prefixes; ParseError on any mismatch.
class WitnessReader {
 public:
  explicit WitnessReader(const std::string& text) : in_(text) {}

  std::string expect(const std::string& prefix) {
    std::string line;
    if (!std::getline(in_, line))
      throw ParseError("witness file truncated before '" + prefix + "'");
    line = trim(line);
    if (line.rfind(prefix, 0) != 0)
      throw ParseError("expected '" + prefix + "', got '" + line + "'");
    return trim(line.substr(prefix.size()));
  }

 private:
  std::istringstream in_;
};

CstWitnessMap read_cst_witness(const std::string& text, const FiniteSemigroup& s) {
  WitnessReader r(text);
  r.expect("cst-witness v1");
  int order = std::stoi(r.expect("order:"));
  if (order != s.order())
    throw ValidationError("witness order does not match the semigroup");
  CstWitnessMap map;
  map.target = parse_subset(r.expect("target:"), s);
  map.idempotent = std::stoi(r.expect("idempotent:"));
  int nf = std::stoi(r.expect("families:"));
  for (int i = 1; i <= nf; ++i) {
    int ns = std::stoi(r.expect("family " + std::to_string(i) + " seqs:"));
    std::vector<std::vector<int>> seqs;
    for (int j = 1; j <= ns; ++j)
      seqs.push_back(parse_ints(r.expect("family " + std::to_string(i) +
                                         " seq " + std::to_string(j) + ":")));
    map.families.push_back(SequenceFamily(seqs));
  }
  int ne = std::stoi(r.expect("entries:"));
  for (int i = 1; i <= ne; ++i) {
    std::string p = "entry " + std::to_string(i) + " ";
    CstEntry e;
    e.subset = parse_ints(r.expect(p + "subset:"));
    e.m = std::stoi(r.expect(p + "m:"));
    e.alpha = parse_slots(r.expect(p + "alpha:"));
    e.tau = IndexTuple(parse_ints(r.expect(p + "tau:")));
    map.entries.push_back(std::move(e));
  }
  return map;
}

// --- sgp subcommands ----------------------------------------------------------

int run_sgp_validate(const std::string& file) {
  auto s = load_semigroup_file(file);
  auto rep = s.report();
  std::cout << "order: " << s.order() << "\n";
  std::cout << "associative: true\n";
  std::cout << "identity: "
            << (rep.identity ? s.label(*rep.identity) : std::string("none"))
            << "\n";
  std::cout << "commutative: " << (rep.commutative ? "true" : "false") << "\n";
  return kOk;
}

int run_sgp_kernel(const std::string& file) {
  auto s = load_semigroup_file(file);
  auto d = ideal_decomposition(s);
  std::cout << "idempotents: " << format_subset(d.idempotents, &s) << "\n";
  for (size_t i = 0; i < d.minimal_left.size(); ++i)
    std::cout << "minimal-left " << (i + 1) << ": "
              << format_subset(d.minimal_left[i], &s) << "\n";
  for (size_t i = 0; i < d.minimal_right.size(); ++i)
    std::cout << "minimal-right " << (i + 1) << ": "
              << format_subset(d.minimal_right[i], &s) << "\n";
  std::cout << "kernel: " << format_subset(d.kernel, &s) << "\n";
  std::cout << "minimal-idempotents: " << format_subset(d.minimal_idempotents, &s)
            << "\n";
  return kOk;
}

int run_sgp_classify(const std::string& file, const std::string& set_lit) {
  auto s = load_semigroup_file(file);
  auto a = parse_subset(set_lit, s);
  auto th = is_thick(s, a);
  std::cout << "thick: " << (th.thick ? "true" : "false");
  if (th.witness_x) std::cout << " witness: " << s.label(*th.witness_x);
  std::cout << "\n";
  auto sy = is_syndetic(s, a);
  std::cout << "syndetic: " << (sy.syndetic ? "true" : "false");
  if (sy.witness_g) std::cout << " witness: " << format_subset(*sy.witness_g, &s);
  std::cout << "\n";
  auto pw = is_piecewise_syndetic(s, a);
  std::cout << "pws(comb): " << (pw.combinatorial ? "true" : "false");
  if (pw.witness)
    std::cout << " witness: g=" << format_subset(pw.witness->g, &s)
              << " x=" << s.label(pw.witness->x);
  std::cout << "\n";
  std::cout << "pws(alg): " << (pw.algebraic ? "true" : "false") << "\n";
  auto ce = is_central(s, a);
  std::cout << "central: " << (ce.central ? "true" : "false");
  if (ce.witness_idempotent)
    std::cout << " witness: " << s.label(*ce.witness_idempotent);
  std::cout << "\n";
  return kOk;
}

int run_sgp_jset(const std::string& file, const std::string& set_lit,
                 const std::string& fam_file, int max_m) {
  auto s = load_semigroup_file(file);
  auto a = parse_subset(set_lit, s);
  auto fam = parse_family(read_file(fam_file), s);
  auto v = is_j_set_bounded(s, a, fam, max_m);
  std::cout << "jset: " << verdict_line(v.status) << "\n";
  std::cout << "bounds: " << v.bounds << "\n";
  if (v.witness) {
    std::cout << "m: " << v.witness->m << "\n";
    std::cout << "a: " << format_slots(v.witness->a) << "\n";
    std::cout << "t: " << join_ints(v.witness->t.t) << "\n";
  }
  return v.established() ? kOk : kRefuted;
}

int run_sgp_filter_classify(const std::string& file, const std::string& base_file,
                            const std::string& set_lit) {
  auto s = load_semigroup_file(file);
  auto f = parse_filter_base(read_file(base_file), s);
  auto b = closure_set(s, f);
  std::cout << "closure: " << format_subset(b, &s) << "\n";
  auto idem = is_idempotent_filter(s, f);
  std::cout << "idempotent-filter: " << (idem.idempotent ? "true" : "false")
            << "\n";
  auto a = parse_subset(set_lit, s);
  auto pw = is_pws_f_syndetic(s, f, a);
  std::cout << "pws(comb): " << (pw.combinatorial ? "true" : "false");
  if (pw.witness) std::cout << " witness: y=" << s.label(pw.witness->y);
  std::cout << "\n";
  std::cout << "pws(alg): " << (pw.algebraic ? "true" : "false") << "\n";
  std::cout << "agree: " << (pw.agree ? "true" : "false") << "\n";
  auto ce = is_f_central(s, f, a);
  std::cout << "central: " << (ce.central ? "true" : "false");
  if (ce.witness_idempotent)
    std::cout << " witness: " << s.label(*ce.witness_idempotent);
  std::cout << "\n";
  auto ip = is_f_ip(s, f, a, false);
  std::cout << "ip: " << (ip.holds ? "true" : "false") << "\n";
  auto ips = is_f_ip(s, f, a, true);
  std::cout << "ip*: " << (ips.holds ? "true" : "false") << "\n";
  return kOk;
}

int run_sgp_cst(const std::string& file, const std::string& base_file,
                const std::string& set_lit, const std::string& fam_file,
                const std::string& out_file, int size_cap, int k_max,
                int hj_cap) {
  auto s = load_semigroup_file(file);
  FilterBase f = base_file.empty() ? trivial_filter(s)
                                   : parse_filter_base(read_file(base_file), s);
  auto a = parse_subset(set_lit, s);
  auto families = parse_families(read_file(fam_file), s);
  auto map = cst_build(s, f, a, families, size_cap, k_max, hj_cap);
  std::ofstream out(out_file);
  if (!out) throw ParseError("cannot write " + out_file);
  write_cst_witness(out, s, map);
  std::cout << "families: " << map.families.size() << "\n";
  std::cout << "entries: " << map.entries.size() << "\n";
  std::cout << "idempotent: " << s.label(map.idempotent) << "\n";
  return kOk;
}

int run_sgp_cst_verify(const std::string& file, const std::string& witness_file) {
  auto s = load_semigroup_file(file);
  auto map = read_cst_witness(read_file(witness_file), s);
  auto res = cst_verify(s, map.target, map);
  std::cout << "verified: " << (res.ok ? "true" : "false") << "\n";
  for (const auto& msg : res.failures) std::cout << "failure: " << msg << "\n";
  return res.ok ? kOk : kRefuted;
}

// --- hj -----------------------------------------------------------------------

int run_hj(int colors, int alphabet, int max_n, const std::string& cert_file) {
  auto res = hj::hj_number(colors, alphabet, max_n);
  if (res.determined)
    std::cout << "HJ(" << colors << "," << alphabet << ") = " << res.value
              << "\n";
  else
    std::cout << "HJ(" << colors << "," << alphabet << ") > " << res.value
              << "\n";
  if (!cert_file.empty()) {
    if (!res.certificate) {
      std::cout << "certificate: none\n";
    } else {
      std::ofstream out(cert_file);
      if (!out) throw ParseError("cannot write " + cert_file);
      int n = res.certificate_n;
      long count = hj::word_count(n, alphabet);
      for (long i = 0; i < count; ++i) {
        auto w = hj::word_at(i, n, alphabet);
        for (int c : w) out << c;
        out << " " << (*res.certificate)[i] << "\n";
      }
      std::cout << "certificate-n: " << n << "\n";
    }
  }
  return kOk;
}

// --- window subcommands ---------------------------------------------------------

int run_window_classify(long w, const std::string& spec, long gap, long block) {
  WindowSet a = WindowSet::from_spec(w, spec);
  auto v = classify_window(a, gap, block);
  std::cout << "syndetic: " << verdict_line(v.syndetic.status);
  if (v.syndetic.witness) std::cout << " witness: " << *v.syndetic.witness;
  std::cout << "\n";
  std::cout << "thick: " << verdict_line(v.thick.status);
  if (v.thick.witness) std::cout << " witness: " << *v.thick.witness;
  std::cout << "\n";
  std::cout << "pws: " << verdict_line(v.pws.status);
  if (v.pws.witness)
    std::cout << " witness: g=" << v.pws.witness->first
              << " start=" << v.pws.witness->second;
  std::cout << "\n";
  return kOk;
}

int run_window_cst(long w, const std::string& spec, const std::string& seq_file,
                   int depth, const CstSearchBounds& bounds) {
  WindowSet a = WindowSet::from_spec(w, spec);
  std::vector<std::vector<long>> ys;
  std::istringstream in(read_file(seq_file));
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    ys.push_back(parse_longs(t));
  }
  if (ys.empty()) throw ParseError("sequence file has no sequences");
  auto v = cst_witness_commutative(a, ys, depth, bounds);
  std::cout << "status: " << verdict_line(v.status) << "\n";
  std::cout << "bounds: " << v.bounds << "\n";
  if (!v.witness) return kRefuted;
  for (size_t i = 0; i < v.witness->a.size(); ++i) {
    std::cout << "a" << (i + 1) << ": " << v.witness->a[i] << "\n";
    std::cout << "H" << (i + 1) << ": " << join_ints(v.witness->h[i]) << "\n";
  }
  bool ok = verify_cst_chain(a, ys, depth, *v.witness);
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kRefuted;
}

int run_window_filter_from_ip(const std::string& seq, bool check_idem,
                              int guard) {
  auto x = parse_longs(seq);
  auto f = filter_from_ip_sequence(x, static_cast<int>(x.size()));
  std::cout << "truncation: " << f.truncation << "\n";
  for (size_t m = 0; m < f.tails.size(); ++m) {
    std::vector<long> tail(f.tails[m].begin(), f.tails[m].end());
    std::cout << "tail " << (m + 1) << ": " << join_longs(tail) << "\n";
  }
  std::vector<long> cl(f.closure().begin(), f.closure().end());
  std::cout << "closure: " << join_longs(cl) << "\n";
  if (!check_idem) return kOk;
  if (guard < 0) guard = std::max(1, f.truncation - 2);
  auto rep = check_truncated_idempotency(f, guard);
  std::cout << "idempotent: " << (rep.passed ? "passed" : "failed")
            << " guard: " << rep.guard << "\n";
  if (rep.failure)
    std::cout << "failure: m=" << rep.failure->first
              << " y=" << rep.failure->second << "\n";
  return rep.passed ? kOk : kRefuted;
}

// --- extract ipr -----------------------------------------------------------------

int run_extract_ipr(const std::string& ambient, const std::string& subgroup,
                    const std::string& h_lit, const std::string& seq) {
  if (ambient == "z") {
    long k = std::stol(subgroup);
    auto h = parse_longs(h_lit);
    auto xs = parse_longs(seq);
    auto e = ipr_star_extract_integers(k, h, xs);
    std::cout << "m: " << e.m << "\n";
    std::cout << "n: " << e.n << "\n";
    std::cout << "t: " << e.t << "\n";
    std::cout << "y: " << e.y << "\n";
    std::cout << "block: " << e.block << "\n";
    std::cout << "block-in-subgroup: " << (e.block % k == 0 ? "true" : "false")
              << "\n";
    return e.block % k == 0 ? kOk : kRefuted;
  }
  FiniteSemigroup s = [&] {
    if (ambient.rfind("zmod:", 0) == 0)
      return cyclic_group(std::stoi(ambient.substr(5)));
    if (ambient.rfind("cayley:", 0) == 0)
      return load_semigroup_file(ambient.substr(7));
    throw ParseError("ambient must be z, zmod:<n>, or cayley:<file>");
  }();
  auto g = parse_subset(subgroup, s);
  auto h = parse_subset(h_lit, s);
  std::vector<int> xs;
  for (const auto& tok : split(seq, ',')) xs.push_back(s.resolve(trim(tok)));
  auto e = ipr_star_extract_cayley(s, g, h, xs);
  std::cout << "m: " << e.m << "\n";
  std::cout << "n: " << e.n << "\n";
  std::cout << "t: " << s.label(static_cast<int>(e.t)) << "\n";
  std::cout << "y: " << s.label(static_cast<int>(e.y)) << "\n";
  std::cout << "block: " << s.label(static_cast<int>(e.block)) << "\n";
  bool in_g = g.contains(static_cast<int>(e.block));
  std::cout << "block-in-subgroup: " << (in_g ? "true" : "false") << "\n";
  return in_g ? kOk : kRefuted;
}

// --- homo check ------------------------------------------------------------------

int run_homo_check(const std::string& from, const std::string& to,
                   const std::string& map_csv, const std::string& fbase,
                   const std::string& gbase, const std::string& set_lit,
                   const std::string& mode_name, int max_m, int k_max) {
  auto src = load_semigroup_file(from);
  auto tgt = load_semigroup_file(to);
  std::vector<int> map;
  for (const auto& tok : split(map_csv, ','))
    map.push_back(tgt.resolve(trim(tok)));
  Homomorphism phi(src, tgt, map);
  std::cout << "homomorphism: valid\n";
  FilterBase f = fbase.empty() ? trivial_filter(src)
                               : parse_filter_base(read_file(fbase), src);
  FilterBase g = gbase.empty() ? trivial_filter(tgt)
                               : parse_filter_base(read_file(gbase), tgt);
  auto base_good = is_good_homomorphism(phi, f, g, GoodnessScope::BaseOnly);
  std::cout << "good-base: " << (base_good.good ? "true" : "false") << "\n";
  auto lit_good = is_good_homomorphism(phi, f, g, GoodnessScope::GeneratedFilter);
  std::cout << "good-generated: " << (lit_good.good ? "true" : "false") << "\n";
  if (!base_good.good) {
    if (base_good.counterexample)
      std::cout << "counterexample: "
                << format_subset(*base_good.counterexample, &phi.source())
                << "\n";
    return kRefuted;
  }
  std::cout << "preimage-lemma: "
            << (preimage_lemma_check(phi, f, g) ? "true" : "false") << "\n";
  if (set_lit.empty()) return kOk;
  auto a = parse_subset(set_lit, src);
  PreservationMode mode;
  PreservationBounds bounds;
  if (mode_name == "pws") {
    mode = PreservationMode::Pws;
  } else if (mode_name == "fj") {
    mode = PreservationMode::FJ;
    // Default certifying family: the constant sequence at the last element on
    // the source side, pushed through the map on the target side.
    int len = std::max(4, max_m + 2);
    bounds.source_family =
        SequenceFamily({std::vector<int>(len, src.order() - 1)});
    bounds.target_family =
        SequenceFamily({std::vector<int>(len, phi(src.order() - 1))});
    bounds.max_m = max_m;
    bounds.k_max = k_max;
  } else {
    throw ParseError("mode must be pws or fj");
  }
  auto rep = verify_preservation(phi, f, g, a, mode, bounds);
  std::cout << "image-hypothesis: " << (rep.image_hypothesis ? "true" : "false")
            << "\n";
  std::cout << "set-hypothesis: " << (rep.set_hypothesis ? "true" : "false")
            << "\n";
  std::cout << "conclusion: " << (rep.conclusion ? "true" : "false") << "\n";
  std::cout << "falsification: " << (rep.falsification ? "true" : "false")
            << "\n";
  return rep.conclusion ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite central-sets toolkit"};
  app.require_subcommand(1);

  int rc = kOk;

  // sgp
  auto* sgp = app.add_subcommand("sgp", "finite semigroup commands");
  sgp->require_subcommand(1);

  std::string sv_file;
  auto* sv = sgp->add_subcommand("validate", "validate a Cayley table");
  sv->add_option("file", sv_file)->required();
  sv->callback([&] { rc = run_sgp_validate(sv_file); });

  std::string sk_file;
  auto* sk = sgp->add_subcommand("kernel", "ideal structure and kernel");
  sk->add_option("file", sk_file)->required();
  sk->callback([&] { rc = run_sgp_kernel(sk_file); });

  std::string sc_file, sc_set;
  auto* sc = sgp->add_subcommand("classify", "largeness classification");
  sc->add_option("file", sc_file)->required();
  sc->add_option("--set", sc_set)->required();
  sc->callback([&] { rc = run_sgp_classify(sc_file, sc_set); });

  std::string sj_file, sj_set, sj_fam;
  int sj_max_m = 0;
  auto* sj = sgp->add_subcommand("jset", "bounded J-set search");
  sj->add_option("file", sj_file)->required();
  sj->add_option("--set", sj_set)->required();
  sj->add_option("--family", sj_fam)->required();
  sj->add_option("--max-m", sj_max_m);
  sj->callback([&] {
    int m = sj_max_m > 0 ? sj_max_m : search_cap(3);
    rc = run_sgp_jset(sj_file, sj_set, sj_fam, m);
  });

  auto* sf = sgp->add_subcommand("filter", "filter-relative checks");
  sf->require_subcommand(1);
  std::string sfc_file, sfc_base, sfc_set;
  auto* sfc = sf->add_subcommand("classify", "filter-relative largeness");
  sfc->add_option("file", sfc_file)->required();
  sfc->add_option("--base", sfc_base)->required();
  sfc->add_option("--set", sfc_set)->required();
  sfc->callback([&] { rc = run_sgp_filter_classify(sfc_file, sfc_base, sfc_set); });

  std::string st_file, st_base, st_set, st_fams, st_out;
  int st_size_cap = 3, st_k_max = 0, st_hj_cap = 4;
  auto* st = sgp->add_subcommand("cst", "bounded-depth central-sets witness");
  st->add_option("file", st_file)->required();
  st->add_option("--base", st_base);
  st->add_option("--set", st_set)->required();
  st->add_option("--families", st_fams)->required();
  st->add_option("--out", st_out)->required();
  st->add_option("--size-cap", st_size_cap);
  st->add_option("--k-max", st_k_max);
  st->add_option("--hj-cap", st_hj_cap);
  st->callback([&] {
    int k = st_k_max > 0 ? st_k_max : search_cap(4);
    rc = run_sgp_cst(st_file, st_base, st_set, st_fams, st_out, st_size_cap, k,
                     st_hj_cap);
  });

  std::string svf_file, svf_witness;
  auto* svf = sgp->add_subcommand("cst-verify", "re-check a witness file");
  svf->add_option("file", svf_file)->required();
  svf->add_option("--witness", svf_witness)->required();
  svf->callback([&] { rc = run_sgp_cst_verify(svf_file, svf_witness); });

  // hj
  int hj_colors = 0, hj_alphabet = 0, hj_max_n = 0;
  std::string hj_cert;
  auto* hjc = app.add_subcommand("hj", "Hales-Jewett number search");
  hjc->add_option("--colors", hj_colors)->required();
  hjc->add_option("--alphabet", hj_alphabet)->required();
  hjc->add_option("--max-n", hj_max_n)->required();
  hjc->add_option("--certificate", hj_cert);
  hjc->callback([&] { rc = run_hj(hj_colors, hj_alphabet, hj_max_n, hj_cert); });

  // window
  auto* win = app.add_subcommand("window", "integer-window commands");
  win->require_subcommand(1);

  long wc_max = 0, wc_gap = 0, wc_block = 0;
  std::string wc_set;
  auto* wc = win->add_subcommand("classify", "bounded largeness in [1,W]");
  wc->add_option("--max", wc_max)->required();
  wc->add_option("--set", wc_set)->required();
  wc->add_option("--gap", wc_gap)->required();
  wc->add_option("--block", wc_block)->required();
  wc->callback([&] { rc = run_window_classify(wc_max, wc_set, wc_gap, wc_block); });

  long wt_max = 0;
  std::string wt_set, wt_seqs;
  int wt_depth = 0;
  CstSearchBounds wt_bounds;
  auto* wt = win->add_subcommand("cst", "central-sets chain search");
  wt->add_option("--max", wt_max)->required();
  wt->add_option("--set", wt_set)->required();
  wt->add_option("--seqs", wt_seqs)->required();
  wt->add_option("--depth", wt_depth)->required();
  wt->add_option("--t-max", wt_bounds.t_max);
  wt->add_option("--a-max", wt_bounds.a_max);
  wt->add_option("--h-size-max", wt_bounds.h_size_max);
  wt->callback([&] { rc = run_window_cst(wt_max, wt_set, wt_seqs, wt_depth, wt_bounds); });

  auto* wf = win->add_subcommand("filter", "truncated integer filters");
  wf->require_subcommand(1);
  std::string wfi_seq;
  bool wfi_check = false;
  int wfi_guard = -1;
  auto* wfi = wf->add_subcommand("from-ip", "tails of a finite-sums filter");
  wfi->add_option("--seq", wfi_seq)->required();
  wfi->add_flag("--check-idempotent", wfi_check);
  wfi->add_option("--guard", wfi_guard);
  wfi->callback([&] { rc = run_window_filter_from_ip(wfi_seq, wfi_check, wfi_guard); });

  // extract
  auto* ex = app.add_subcommand("extract", "pigeonhole extractors");
  ex->require_subcommand(1);
  std::string ei_ambient, ei_sub, ei_h, ei_seq;
  auto* ei = ex->add_subcommand("ipr", "IP_r* block extraction");
  ei->add_option("--ambient", ei_ambient)->required();
  ei->add_option("--subgroup", ei_sub)->required();
  ei->add_option("--syndetic-H", ei_h)->required();
  ei->add_option("--seq", ei_seq)->required();
  ei->callback([&] { rc = run_extract_ipr(ei_ambient, ei_sub, ei_h, ei_seq); });

  // homo
  auto* ho = app.add_subcommand("homo", "homomorphism harnesses");
  ho->require_subcommand(1);
  std::string hc_from, hc_to, hc_map, hc_fbase, hc_gbase, hc_set, hc_mode = "pws";
  int hc_max_m = 0, hc_k_max = 0;
  auto* hc = ho->add_subcommand("check", "goodness and preservation");
  hc->add_option("--from", hc_from)->required();
  hc->add_option("--to", hc_to)->required();
  hc->add_option("--map", hc_map)->required();
  hc->add_option("--fbase", hc_fbase);
  hc->add_option("--gbase", hc_gbase);
  hc->add_option("--set", hc_set);
  hc->add_option("--mode", hc_mode);
  hc->add_option("--max-m", hc_max_m);
  hc->add_option("--k-max", hc_k_max);
  hc->callback([&] {
    int m = hc_max_m > 0 ? hc_max_m : search_cap(2);
    int k = hc_k_max > 0 ? hc_k_max : search_cap(2);
    rc = run_homo_check(hc_from, hc_to, hc_map, hc_fbase, hc_gbase, hc_set,
                        hc_mode, m, k);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_rc = app.exit(e);
    return cli_rc == 0 ? kOk : kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const SearchFailure& e) {
    std::cerr << "search defeated: " << e.what() << "\n";
    return kRefuted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
