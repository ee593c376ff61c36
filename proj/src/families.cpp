#include "minspec/families.hpp"

#include <numeric>
#include <stdexcept>

namespace minspec {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::vector<Prob> zpr_spectrum(int p, int r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r < 1) throw std::invalid_argument("r must be positive");
  long long pr = 1;
  for (int i = 0; i < r; ++i) {
    pr *= p;
    if (pr > kMaxOrder) throw std::invalid_argument("p^r must be <= 64");
  }
  std::vector<Prob> out;
  long long den = pr;
  for (int s = 0; s <= r; ++s) {
    out.push_back(Prob::of(1, den));
    den /= p;
  }
  return out;  // ascending: 1/p^r, ..., 1/p, 1
}

Prob linear_probability(int a, int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (a < 0 || a >= n) throw std::invalid_argument("a out of range");
  long long hits = a == 0 ? n : std::gcd(a, n);
  Prob value = Prob::of(hits, n);
  if (a > 0 && std::gcd(a, n) != 1) {
    // the strict bounds hold by construction; keep them checked
    if (!(Prob::of(1, n) < value && value < Prob::one()))
      throw std::logic_error("strict bound violated");
  }
  return value;
}

std::optional<std::array<int, 3>> semilattice_membership(const Prob& value) {
  for (int p = 0; p <= kMembershipExponentCap; ++p) {
    for (int q = 0; q <= kMembershipExponentCap; ++q) {
      for (int r = 0; r <= kMembershipExponentCap; ++r) {
        long long den = 1ll << (p + q + r);
        long long sub = (1ll << p) + (1ll << q) - 2;
        if (sub > den) continue;
        if (Prob::of(den - sub, den) == value) return std::array<int, 3>{p, q, r};
      }
    }
  }
  return std::nullopt;
}

bool dyadic_membership(const Prob& value) {
  return (value.den & (value.den - 1)) == 0;
}

}  // namespace minspec
