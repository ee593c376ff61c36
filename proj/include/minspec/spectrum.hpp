#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minspec/algebra.hpp"
#include "minspec/term.hpp"

namespace minspec {

// An exact probability: a reduced fraction in [0, 1]. All arithmetic is
// integer-exact; comparisons cross-multiply in 128 bits.
struct Prob {
  long long num = 0;
  long long den = 1;

  static Prob of(long long hits, long long total);
  static Prob one() { return {1, 1}; }

  bool operator==(const Prob&) const = default;
  std::strong_ordering operator<=>(const Prob& o) const;
  Prob operator*(const Prob& o) const;
  Prob pow(int m) const;
  std::string str() const;  // "5/8", integers without the "/1"
};

struct SpectrumEntry {
  Prob value;
  Equation witness;  // first equation in enumeration order with this value
};

struct Spectrum {
  EnumBounds bounds;
  std::vector<SpectrumEntry> entries;  // sorted by value

  bool contains(const Prob& p) const;
  std::vector<Prob> values() const;
};

struct MinimalityVerdict {
  EnumBounds bounds;
  // absent = d-minimal at the bounds; present = first witness whose
  // probability is neither 1 nor 1/n
  std::optional<SpectrumEntry> counterexample;

  bool minimal() const { return !counterexample.has_value(); }
};

enum class DichotomyBranch : std::uint8_t { Identity, QuasiIdentity, Neither };

enum class SetRelation : std::uint8_t {
  Equal,
  LeftInRight,  // strict containment
  RightInLeft,
  Incomparable,
};

// Exact fraction of assignments in [0,n)^k satisfying the equation.
Prob probability(const Equation& e, const Algebra& g);

// All probabilities of the enumerated equations plus the two constant
// members 1 (witness x = x) and 1/n (witness x = y).
Spectrum spectrum(const Algebra& g, EnumBounds bounds);

// Value set of the spectrum at possibly larger bounds, computed by
// deduplicating terms through their induced functions instead of
// enumerating equation pairs; no witnesses. Agrees with spectrum() on
// any bounds both can handle.
std::set<Prob> spectrum_values(const Algebra& g, EnumBounds bounds);

// Short-circuits on the first enumerated witness.
MinimalityVerdict is_d_minimal(const Algebra& g, EnumBounds bounds);
MinimalityVerdict is_d_minimal(const Algebra& g, EnumBounds bounds,
                               const std::vector<Equation>& equations);

// Requires that identifying variables i and j in e yields an identity of
// g (re-verified; throws otherwise). Returns Identity when e itself is
// an identity, QuasiIdentity when every solution of e has coordinates
// i and j equal, Neither otherwise.
DichotomyBranch check_dichotomy(const Algebra& g, const Equation& e, int i,
                                int j);

// |{(x,y,z) : (xy)z = x(yz)}|; equals n^3 exactly for semigroups.
long long count_associative_triples(const Algebra& g);

// Compares solution sets over a common variable frame of
// max(num_vars(e1), num_vars(e2)) coordinates, variables matched by index.
SetRelation solution_set_relation(const Equation& e1, const Equation& e2,
                                  const Algebra& g);

std::string str(DichotomyBranch b);
std::string str(SetRelation r);

}  // namespace minspec
