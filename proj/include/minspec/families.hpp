#pragma once

#include <array>
#include <optional>
#include <vector>

#include "minspec/spectrum.hpp"

namespace minspec {

// Closed-form spectra of a few well-understood families, used as
// independent cross-checks of the probability engine.

// { p^(s-r) : 0 <= s <= r } for prime p with p^r <= 64.
std::vector<Prob> zpr_spectrum(int p, int r);

// Pr(ax = 0) over the cyclic group of order n, i.e. gcd(a,n)/n; for
// 0 < a < n with gcd(a,n) != 1 the value is strictly between 1/n and 1.
Prob linear_probability(int a, int n);

// Smallest (lexicographic) triple (p,q,r) of exponents <= 12 with
// q == 1 - (2^p + 2^q - 2) / 2^(p+q+r), if any. Covers every value the
// two-element meet-semilattice can produce.
std::optional<std::array<int, 3>> semilattice_membership(const Prob& q);

inline constexpr int kMembershipExponentCap = 12;

// Whether the denominator is a power of two (the value set of the
// two-element NAND groupoid).
bool dyadic_membership(const Prob& q);

}  // namespace minspec
