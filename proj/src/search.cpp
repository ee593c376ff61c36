#include "minspec/search.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace minspec {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BranchOut {
  ScanCounters counts;
  std::vector<Algebra> found;  // minimal tables, not yet canonicalized
};

// Runs fn over branch indices with a shared work queue; slot order keeps
// the merged result independent of scheduling.
template <typename Fn>
std::vector<BranchOut> run_branches(std::size_t nbranches, int threads,
                                    Fn&& fn) {
  std::vector<BranchOut> results(nbranches);
  if (threads <= 1 || nbranches <= 1) {
    for (std::size_t i = 0; i < nbranches; ++i) fn(i, results[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < nbranches; i = next++) fn(i, results[i]);
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(threads, static_cast<int>(nbranches));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

void merge_counts(ScanCounters& into, const ScanCounters& from) {
  into.generator_nodes += from.generator_nodes;
  into.generator_pruned += from.generator_pruned;
  into.full_checks += from.full_checks;
  into.witness_rejected += from.witness_rejected;
}

// ---- groupoid raw scan ----------------------------------------------

// A live prefix of a row (or column) is all-equal or all-distinct;
// anything else already fails the squared-multiplicity dichotomy.
bool uniform_or_injective(const std::uint8_t* base, int len, int stride) {
  bool all_equal = true;
  for (int i = 1; i < len; ++i)
    if (base[i * stride] != base[0]) {
      all_equal = false;
      break;
    }
  if (all_equal) return true;
  unsigned mask = 0;
  for (int i = 0; i < len; ++i) {
    unsigned bit = 1u << base[i * stride];
    if (mask & bit) return false;
    mask |= bit;
  }
  return true;
}

// All rows must be of one kind, and all columns too; a prefix of length
// two already commits its line.
bool kinds_agree(const std::uint8_t* t, int n, int idx) {
  int r = idx / n, c = idx % n;
  int row_kind = -1;  // 0 constant, 1 injective
  for (int i = 0; i <= r; ++i) {
    int len = i < r ? n : c + 1;
    if (len < 2) continue;
    int kind = t[i * n] == t[i * n + 1] ? 0 : 1;
    if (row_kind < 0) row_kind = kind;
    else if (row_kind != kind) return false;
  }
  int col_kind = -1;
  for (int j = 0; j < n; ++j) {
    int len = j <= c ? r + 1 : r;
    if (len < 2) continue;
    int kind = t[j] == t[n + j] ? 0 : 1;
    if (col_kind < 0) col_kind = kind;
    else if (col_kind != kind) return false;
  }
  return true;
}

bool dichotomy_prefix_ok(const std::uint8_t* t, int n, int idx) {
  int r = idx / n, c = idx % n;
  if (!uniform_or_injective(t + r * n, c + 1, 1)) return false;
  if (!uniform_or_injective(t + c, r + 1, n)) return false;
  return kinds_agree(t, n, idx);
}

using PrefixOk = bool (*)(const std::uint8_t*, int, int);

struct TableScan {
  int n = 0;
  EnumBounds bounds;
  const std::vector<Equation>* equations = nullptr;
  PrefixOk prefix_ok = nullptr;

  void leaf(std::uint8_t* t, BranchOut& out) const {
    out.counts.full_checks++;
    Algebra g = Algebra::binary(n, std::vector<std::uint8_t>(t, t + n * n));
    MinimalityVerdict v = is_d_minimal(g, bounds, *equations);
    if (v.minimal())
      out.found.push_back(std::move(g));
    else
      out.counts.witness_rejected++;
  }

  void rec(std::uint8_t* t, int idx, int end, BranchOut& out) const {
    if (idx == end) {
      leaf(t, out);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[idx] = static_cast<std::uint8_t>(v);
      out.counts.generator_nodes++;
      if (prefix_ok(t, n, idx))
        rec(t, idx + 1, end, out);
      else
        out.counts.generator_pruned++;
    }
  }

  // Enumerates prefixes of the first `split` cells in the main thread
  // (counting like the workers do), then fans out.
  void collect_prefixes(std::uint8_t* t, int idx, int split, BranchOut& head,
                        std::vector<std::vector<std::uint8_t>>& prefixes) const {
    if (idx == split) {
      prefixes.emplace_back(t, t + split);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[idx] = static_cast<std::uint8_t>(v);
      head.counts.generator_nodes++;
      if (prefix_ok(t, n, idx))
        collect_prefixes(t, idx + 1, split, head, prefixes);
      else
        head.counts.generator_pruned++;
    }
  }

  // Full two-phase run; split at the end of the first row.
  void run(int threads, ScanCounters& counts,
           std::vector<Algebra>& found) const {
    int end = n * n;
    int split = std::min(n, end);
    std::uint8_t cells[kMaxSearchOrder * kMaxSearchOrder];
    BranchOut head;
    std::vector<std::vector<std::uint8_t>> prefixes;
    collect_prefixes(cells, 0, split, head, prefixes);
    auto results = run_branches(
        prefixes.size(), threads, [&](std::size_t i, BranchOut& out) {
          std::uint8_t local[kMaxSearchOrder * kMaxSearchOrder];
          std::copy(prefixes[i].begin(), prefixes[i].end(), local);
          rec(local, split, end, out);
        });
    counts = head.counts;
    for (const BranchOut& b : results) {
      merge_counts(counts, b.counts);
      for (const Algebra& g : b.found) found.push_back(g);
    }
  }
};

// ---- latin squares ---------------------------------------------------

bool latin_prefix_ok(const std::uint8_t* t, int n, int idx) {
  int r = idx / n, c = idx % n;
  std::uint8_t v = t[idx];
  for (int j = 0; j < c; ++j)
    if (t[r * n + j] == v) return false;
  for (int i = 0; i < r; ++i)
    if (t[i * n + c] == v) return false;
  return true;
}

// ---- semigroups ------------------------------------------------------

// Checks every associativity triple whose reads all became defined with
// the cell just filled. Cells are filled row-major, so a product (x,y)
// is defined exactly when x*n+y <= idx.
bool assoc_prefix_ok(const std::uint8_t* t, int n, int idx) {
  int a = idx / n, b = idx % n;
  auto defined = [&](int x, int y) { return x * n + y <= idx; };
  auto value = [&](int x, int y) { return t[x * n + y]; };
  auto triple_ok = [&](int x, int y, int z) {
    if (!defined(x, y) || !defined(y, z)) return true;
    int xy = value(x, y), yz = value(y, z);
    if (!defined(xy, z) || !defined(x, yz)) return true;
    return value(xy, z) == value(x, yz);
  };
  for (int z = 0; z < n; ++z)
    if (!triple_ok(a, b, z)) return false;
  for (int x = 0; x < n; ++x)
    if (!triple_ok(x, a, b)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (defined(x, y) && value(x, y) == a && !triple_ok(x, y, b))
        return false;
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      if (defined(y, z) && value(y, z) == b && !triple_ok(a, y, z))
        return false;
  return true;
}

// ---- survivor assembly -----------------------------------------------

Survivor make_binary_survivor(const Algebra& canon) {
  return Survivor{canon, classify_structure(canon), structure_profile(canon),
                  std::nullopt};
}

Survivor make_unary_survivor(const Algebra& canon) {
  Survivor s{canon, std::nullopt, std::nullopt, std::nullopt};
  std::vector<bool> hit(canon.order(), false);
  bool perm = true;
  for (int x = 0; x < canon.order(); ++x) {
    if (hit[canon.at(x)]) {
      perm = false;
      break;
    }
    hit[canon.at(x)] = true;
  }
  if (perm) s.cycles = cycle_type(canon.table());
  return s;
}

std::vector<Survivor> dedupe(const std::vector<Algebra>& found,
                             bool anti_dedupe) {
  std::map<Algebra, Survivor> classes;
  for (const Algebra& g : found) {
    Algebra canon = canonical_form(g, anti_dedupe);
    if (classes.count(canon)) continue;
    Survivor s = canon.signature() == Signature::Binary
                     ? make_binary_survivor(canon)
                     : make_unary_survivor(canon);
    classes.emplace(canon, std::move(s));
  }
  std::vector<Survivor> out;
  out.reserve(classes.size());
  for (auto& [key, s] : classes) out.push_back(std::move(s));
  return out;
}

void check_scan_bounds(EnumBounds b) {
  // the dichotomy equations x*y=x*z and y*x=z*x must be inside the
  // bounds for the row/column rejections to be consequences of
  // d-minimality at those bounds
  require(b.max_size >= 2 && b.max_vars >= 3,
          "scan bounds must include size 2 and 3 variables");
}

}  // namespace

std::vector<Algebra> ClassificationReport::survivor_tables() const {
  std::vector<Algebra> out;
  out.reserve(survivors.size());
  for (const Survivor& s : survivors) out.push_back(s.algebra);
  return out;
}

ClassificationReport scan_groupoids(int n, EnumBounds bounds, ScanMode mode,
                                    int threads) {
  require(n >= 1, "order must be positive");
  require(mode == ScanMode::Raw ? n <= 4 : n <= 5, "order beyond scan cap");
  check_scan_bounds(bounds);
  threads = resolve_threads(threads);
  auto start = Clock::now();
  std::vector<Equation> eqs = enumerate_equations(Signature::Binary, bounds);

  ClassificationReport rep;
  rep.kind = ScanKind::Groupoid;
  rep.mode = mode;
  rep.order = n;
  rep.bounds = bounds;

  std::vector<Algebra> found;
  if (mode == ScanMode::Raw) {
    TableScan scan{n, bounds, &eqs, &dichotomy_prefix_ok};
    scan.run(threads, rep.counts, found);
  } else {
    // structural candidates: constant, one-sided tables from isocyclic
    // permutations, and every Latin square
    std::vector<Algebra> candidates;
    candidates.push_back(Algebra::constant(n));
    for (int a = 1; a < n; ++a) {
      if ((n - 1) % a != 0) continue;
      candidates.push_back(Algebra::arg_left_isocyclic(n, a));
      candidates.push_back(Algebra::arg_right_isocyclic(n, a));
    }
    for (const Algebra& g : candidates) {
      rep.counts.full_checks++;
      if (is_d_minimal(g, bounds, eqs).minimal())
        found.push_back(g);
      else
        rep.counts.witness_rejected++;
    }
    TableScan scan{n, bounds, &eqs, &latin_prefix_ok};
    ScanCounters latin_counts;
    std::vector<Algebra> latin_found;
    scan.run(threads, latin_counts, latin_found);
    merge_counts(rep.counts, latin_counts);
    for (Algebra& g : latin_found) found.push_back(std::move(g));
  }
  rep.survivors = dedupe(found, rep.anti_dedupe);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ClassificationReport scan_latin_squares(int n, EnumBounds bounds,
                                        int threads) {
  require(n >= 1 && n <= 5, "order beyond scan cap");
  check_scan_bounds(bounds);
  threads = resolve_threads(threads);
  auto start = Clock::now();
  std::vector<Equation> eqs = enumerate_equations(Signature::Binary, bounds);

  ClassificationReport rep;
  rep.kind = ScanKind::Latin;
  rep.order = n;
  rep.bounds = bounds;

  std::vector<Algebra> found;
  TableScan scan{n, bounds, &eqs, &latin_prefix_ok};
  scan.run(threads, rep.counts, found);
  rep.survivors = dedupe(found, rep.anti_dedupe);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

void for_each_latin_square(int n,
                           const std::function<void(const Algebra&)>& fn) {
  require(n >= 1 && n <= 5, "order beyond scan cap");
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n, 0);
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n * n) {
      fn(Algebra::binary(n, t));
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[idx] = static_cast<std::uint8_t>(v);
      if (latin_prefix_ok(t.data(), n, idx)) self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

ClassificationReport scan_monounary(int n, EnumBounds bounds, int threads) {
  require(n >= 1 && n <= 6, "order beyond scan cap");
  require(bounds.max_size >= n,
          "unary bounds must reach the iterated images (max_size >= n)");
  threads = resolve_threads(threads);
  auto start = Clock::now();
  std::vector<Equation> eqs = enumerate_equations(Signature::Unary, bounds);

  ClassificationReport rep;
  rep.kind = ScanKind::Unary;
  rep.order = n;
  rep.bounds = bounds;

  // branch on f(0); each branch walks its n^(n-1) maps by odometer
  std::size_t per_branch = 1;
  for (int i = 1; i < n; ++i) per_branch *= n;
  auto results = run_branches(
      static_cast<std::size_t>(n), threads, [&](std::size_t b, BranchOut& out) {
        std::vector<std::uint8_t> f(n, 0);
        f[0] = static_cast<std::uint8_t>(b);
        for (std::size_t m = 0; m < per_branch; ++m) {
          std::size_t rest = m;
          for (int i = 1; i < n; ++i) {
            f[i] = static_cast<std::uint8_t>(rest % n);
            rest /= n;
          }
          out.counts.generator_nodes++;
          out.counts.full_checks++;
          Algebra g = Algebra::unary(f);
          if (is_d_minimal(g, bounds, eqs).minimal())
            out.found.push_back(std::move(g));
          else
            out.counts.witness_rejected++;
        }
      });
  std::vector<Algebra> found;
  for (const BranchOut& b : results) {
    merge_counts(rep.counts, b.counts);
    for (const Algebra& g : b.found) found.push_back(g);
  }
  rep.survivors = dedupe(found, rep.anti_dedupe);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ClassificationReport scan_semigroups(int n, EnumBounds bounds, int threads) {
  require(n >= 1 && n <= 4, "order beyond scan cap");
  check_scan_bounds(bounds);
  threads = resolve_threads(threads);
  auto start = Clock::now();
  std::vector<Equation> eqs = enumerate_equations(Signature::Binary, bounds);

  ClassificationReport rep;
  rep.kind = ScanKind::Semigroup;
  rep.order = n;
  rep.bounds = bounds;

  std::vector<Algebra> found;
  TableScan scan{n, bounds, &eqs, &assoc_prefix_ok};
  scan.run(threads, rep.counts, found);
  rep.survivors = dedupe(found, rep.anti_dedupe);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

namespace {

std::string table_one_line(const Algebra& g) {
  std::string out;
  int n = g.order();
  if (g.signature() == Signature::Unary) {
    for (int x = 0; x < n; ++x) {
      if (x) out += " ";
      out += std::to_string(g.at(x));
    }
    return out;
  }
  for (int x = 0; x < n; ++x) {
    if (x) out += " / ";
    for (int y = 0; y < n; ++y) {
      if (y) out += " ";
      out += std::to_string(g.at(x, y));
    }
  }
  return out;
}

std::string survivor_label(const Survivor& s) {
  if (s.cls) return s.cls->str();
  if (s.cycles) return "isocyclic-permutation " + s.cycles->str();
  return "constant-map";
}

std::string kind_name(ScanKind k) {
  switch (k) {
    case ScanKind::Groupoid: return "groupoid";
    case ScanKind::Latin: return "latin";
    case ScanKind::Unary: return "unary";
    case ScanKind::Semigroup: return "semigroup";
  }
  return "groupoid";
}

}  // namespace

std::string ClassificationReport::to_json_lines() const {
  nlohmann::json summary{
      {"kind", kind_name(kind)},
      {"mode", mode == ScanMode::Raw ? "raw" : "pruned"},
      {"order", order},
      {"bounds", {{"max_size", bounds.max_size}, {"max_vars", bounds.max_vars}}},
      {"anti_dedupe", anti_dedupe},
      {"survivor_classes", survivors.size()},
      {"counters",
       {{"generator_nodes", counts.generator_nodes},
        {"generator_pruned", counts.generator_pruned},
        {"full_checks", counts.full_checks},
        {"witness_rejected", counts.witness_rejected}}}};
  std::string out;
  for (const Survivor& s : survivors) {
    nlohmann::json row;
    row["order"] = s.algebra.order();
    if (s.algebra.signature() == Signature::Binary) {
      nlohmann::json tbl = nlohmann::json::array();
      for (int x = 0; x < s.algebra.order(); ++x) {
        nlohmann::json r = nlohmann::json::array();
        for (int y = 0; y < s.algebra.order(); ++y)
          r.push_back(int(s.algebra.at(x, y)));
        tbl.push_back(std::move(r));
      }
      row["table"] = std::move(tbl);
    } else {
      nlohmann::json tbl = nlohmann::json::array();
      for (int x = 0; x < s.algebra.order(); ++x)
        tbl.push_back(int(s.algebra.at(x)));
      row["map"] = std::move(tbl);
    }
    row["class"] = survivor_label(s);
    if (s.profile) {
      row["commutative"] = s.profile->commutative;
      row["anticommutative"] = s.profile->anticommutative;
      row["latin"] = s.profile->latin;
      row["associative"] = s.profile->associative;
      row["left_alternative"] = s.profile->left_alternative;
      row["right_alternative"] = s.profile->right_alternative;
      row["flexible"] = s.profile->flexible;
      row["left_moufang"] = s.profile->left_moufang;
      row["diagonal_constant"] = s.profile->diagonal_constant;
      row["has_neutral"] = s.profile->neutral.has_value();
      row["idempotents"] = s.profile->idempotents;
    }
    if (s.cycles) row["cycle_type"] = s.cycles->lengths;
    out += row.dump();
    out += "\n";
  }
  out += nlohmann::json{{"summary", summary}}.dump();
  out += "\n";
  return out;
}

std::string ClassificationReport::to_table() const {
  std::string out = "scan " + kind_name(kind) + " order " +
                    std::to_string(order) + " (" +
                    (mode == ScanMode::Raw ? "raw" : "pruned") + "), bounds size<=" +
                    std::to_string(bounds.max_size) + " vars<=" +
                    std::to_string(bounds.max_vars) + ", anti-iso dedupe " +
                    (anti_dedupe ? "on" : "off") + "\n";
  out += "nodes " + std::to_string(counts.generator_nodes) + ", pruned " +
         std::to_string(counts.generator_pruned) + ", full checks " +
         std::to_string(counts.full_checks) + ", witness rejected " +
         std::to_string(counts.witness_rejected) + "\n";
  out += std::to_string(survivors.size()) + " survivor class(es):\n";
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    out += "  [" + std::to_string(i + 1) + "] " + survivor_label(survivors[i]) +
           "  |  " + table_one_line(survivors[i].algebra) + "\n";
  }
  return out;
}

bool VerifySummary::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifySummary::to_text() const {
  std::string out;
  for (const CheckResult& c : checks) {
    char line[64];
    std::snprintf(line, sizeof line, "[%s] %s  ", c.id.c_str(),
                  c.pass ? "PASS" : "FAIL");
    out += line;
    out += c.claim + ": expected " + c.expected + ", got " + c.got;
    std::snprintf(line, sizeof line, "  (%.2fs)\n", c.seconds);
    out += line;
  }
  out += all_pass() ? "all checks passed\n" : "SOME CHECKS FAILED\n";
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("MINSPEC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? std::min<int>(static_cast<int>(hw), 8) : 1;
}

}  // namespace minspec
