#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minspec/algebra.hpp"
#include "minspec/spectrum.hpp"
#include "minspec/term.hpp"

namespace minspec {

enum class ScanMode : std::uint8_t { Raw, Pruned };
enum class ScanKind : std::uint8_t { Groupoid, Latin, Unary, Semigroup };

struct Survivor {
  Algebra algebra;  // canonical form
  std::optional<StructureClass> cls;        // binary scans
  std::optional<StructureProfile> profile;  // binary scans
  std::optional<CycleType> cycles;          // unary permutation survivors
};

struct ScanCounters {
  unsigned long long generator_nodes = 0;   // cell assignments tried
  unsigned long long generator_pruned = 0;  // partial tables rejected
  unsigned long long full_checks = 0;       // complete tables fully checked
  unsigned long long witness_rejected = 0;  // full checks that found a witness

  friend bool operator==(const ScanCounters&, const ScanCounters&) = default;
};

struct ClassificationReport {
  ScanKind kind = ScanKind::Groupoid;
  ScanMode mode = ScanMode::Raw;
  int order = 0;
  EnumBounds bounds;
  bool anti_dedupe = false;  // whether transposes were merged
  std::vector<Survivor> survivors;  // sorted by canonical table
  ScanCounters counts;
  double wall_seconds = 0;  // informational only, never serialized

  std::vector<Algebra> survivor_tables() const;
  // one JSON object per survivor, then one summary object; byte-identical
  // across runs and thread counts
  std::string to_json_lines() const;
  std::string to_table() const;
};

// Exhausts all n^(n^2) tables through a backtracking generator. Raw mode
// rejects a partial table only via two consequences of minimality itself:
// Pr(x*y = x*z) = (sum of squared row multiplicities)/n^3 lies in
// {1, 1/n} exactly when all rows are constant or all rows are
// permutations, and the column dual for Pr(y*x = z*x). Pruned mode
// generates only the structural candidates those rejections leave
// (constant table, one-sided isocyclic tables, Latin squares). Both
// modes full-check every candidate and must agree.
ClassificationReport scan_groupoids(int n, EnumBounds bounds, ScanMode mode,
                                    int threads = 0);

ClassificationReport scan_latin_squares(int n, EnumBounds bounds,
                                        int threads = 0);

// All n^n unary maps; requires bounds.max_size >= n so the iterated
// images f^a(x) stay inside the equation bounds.
ClassificationReport scan_monounary(int n, EnumBounds bounds, int threads = 0);

// Backtracking over tables with incremental associativity rejection:
// every triple is checked as soon as the last cell it reads is filled.
ClassificationReport scan_semigroups(int n, EnumBounds bounds,
                                     int threads = 0);

// Deterministic enumeration of every order-n Latin square, row-major.
void for_each_latin_square(int n,
                           const std::function<void(const Algebra&)>& fn);

struct SuiteFinding {
  std::string subject;
  std::string check;
  bool pass = false;
  std::string detail;
};

// Weak-associativity consequences over a binary scan report:
//  - a d-minimal quasigroup survivor that is a loop, alternative,
//    ditercitive, or commutative semialternative must be associative;
//  - every loop of the scanned order has at least 3n^2-3n+1 associative
//    triples, every alternative quasigroup at least 2n^2-n;
//  - a survivor satisfying two incomparable specializations of the left
//    Moufang identity must satisfy the identity itself.
std::vector<SuiteFinding> weak_assoc_suite(const ClassificationReport& report);

enum class VerifyLevel : std::uint8_t { Quick, Full };

struct CheckResult {
  std::string id;
  std::string claim;
  std::string expected;
  std::string got;
  bool pass = false;
  double seconds = 0;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_text() const;
};

// Runs the whole reproduction suite; Quick omits the raw order-4 scan.
VerifySummary run_verification_suite(VerifyLevel level, int threads = 0);

// --threads flag if positive, else MINSPEC_THREADS, else hardware.
int resolve_threads(int requested);

}  // namespace minspec
