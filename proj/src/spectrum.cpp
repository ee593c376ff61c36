#include "minspec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace minspec {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Assignment spaces stay well below this; the guard is for misuse.
constexpr long long kAssignmentBudget = 100'000'000;

long long assignment_count(int n, int k) {
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n;
    require(total <= kAssignmentBudget, "assignment space exceeds budget");
  }
  return total;
}

void check_signature(const Equation& e, const Algebra& g) {
  require(e.compatible(g.signature()), "signature mismatch");
}

// Iterates all assignments of k variables over [0,n), first variable
// fastest. The callback sees the assignment array.
template <typename Fn>
void for_each_assignment(int n, int k, Fn&& fn) {
  std::uint8_t a[Term::kMaxVars] = {0, 0, 0, 0};
  while (true) {
    fn(a);
    int i = 0;
    while (i < k && ++a[i] == n) a[i++] = 0;
    if (i == k) return;
  }
}

}  // namespace

Prob Prob::of(long long hits, long long total) {
  require(total >= 1 && hits >= 0 && hits <= total, "bad fraction");
  long long g = std::gcd(hits, total);
  return {hits / g, total / g};
}

std::strong_ordering Prob::operator<=>(const Prob& o) const {
  __int128 a = static_cast<__int128>(num) * o.den;
  __int128 b = static_cast<__int128>(o.num) * den;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Prob Prob::operator*(const Prob& o) const {
  // cross-reduce first so the product fits 64 bits whenever reduced
  long long g1 = std::gcd(num, o.den);
  long long g2 = std::gcd(o.num, den);
  __int128 n = static_cast<__int128>(num / g1) * (o.num / g2);
  __int128 d = static_cast<__int128>(den / g2) * (o.den / g1);
  require(n <= INT64_MAX && d <= INT64_MAX, "fraction overflow");
  return {static_cast<long long>(n), static_cast<long long>(d)};
}

Prob Prob::pow(int m) const {
  Prob r = one();
  for (int i = 0; i < m; ++i) r = r * *this;
  return r;
}

std::string Prob::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool Spectrum::contains(const Prob& p) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const SpectrumEntry& e) { return e.value == p; });
}

std::vector<Prob> Spectrum::values() const {
  std::vector<Prob> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

Prob probability(const Equation& e, const Algebra& g) {
  check_signature(e, g);
  int n = g.order();
  int k = e.num_vars();
  long long total = assignment_count(n, k);
  long long hits = 0;
  const auto& lhs = e.lhs();
  const auto& rhs = e.rhs();
  for_each_assignment(n, k, [&](const std::uint8_t* a) {
    if (lhs.eval(a, g) == rhs.eval(a, g)) ++hits;
  });
  return Prob::of(hits, total);
}

Spectrum spectrum(const Algebra& g, EnumBounds bounds) {
  std::vector<Equation> eqs = enumerate_equations(g.signature(), bounds);
  Spectrum out{bounds, {}};
  std::map<Prob, Equation> seen;
  // the two constant members of every spectrum
  seen.emplace(Prob::one(), Equation::canonical(Term::var(0), Term::var(0)));
  seen.emplace(Prob::of(1, g.order()),
               Equation::canonical(Term::var(0), Term::var(1)));
  for (const Equation& e : eqs) {
    Prob p = probability(e, g);
    seen.emplace(p, e);  // first witness in enumeration order wins
  }
  for (auto& [value, witness] : seen)
    out.entries.push_back({value, witness});
  return out;
}

MinimalityVerdict is_d_minimal(const Algebra& g, EnumBounds bounds) {
  return is_d_minimal(g, bounds, enumerate_equations(g.signature(), bounds));
}

MinimalityVerdict is_d_minimal(const Algebra& g, EnumBounds bounds,
                               const std::vector<Equation>& equations) {
  Prob uniform = Prob::of(1, g.order());
  for (const Equation& e : equations) {
    Prob p = probability(e, g);
    if (p == Prob::one() || p == uniform) continue;
    return {bounds, SpectrumEntry{p, e}};
  }
  return {bounds, std::nullopt};
}

DichotomyBranch check_dichotomy(const Algebra& g, const Equation& e, int i,
                                int j) {
  Equation sp = specialize(e, i, j);
  require(probability(sp, g) == Prob::one(),
          "the specialization is not an identity of the algebra");
  if (probability(e, g) == Prob::one()) return DichotomyBranch::Identity;
  int n = g.order();
  int k = e.num_vars();
  assignment_count(n, k);
  bool quasi = true;
  for_each_assignment(n, k, [&](const std::uint8_t* a) {
    if (!quasi) return;
    if (a[i] != a[j] && e.lhs().eval(a, g) == e.rhs().eval(a, g)) quasi = false;
  });
  return quasi ? DichotomyBranch::QuasiIdentity : DichotomyBranch::Neither;
}

long long count_associative_triples(const Algebra& g) {
  require(g.signature() == Signature::Binary, "needs a binary table");
  int n = g.order();
  long long count = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.at(g.at(x, y), z) == g.at(x, g.at(y, z))) ++count;
  return count;
}

SetRelation solution_set_relation(const Equation& e1, const Equation& e2,
                                  const Algebra& g) {
  check_signature(e1, g);
  check_signature(e2, g);
  int k = std::max(e1.num_vars(), e2.num_vars());
  int n = g.order();
  assignment_count(n, k);
  bool only1 = false, only2 = false;
  for_each_assignment(n, k, [&](const std::uint8_t* a) {
    bool in1 = e1.lhs().eval(a, g) == e1.rhs().eval(a, g);
    bool in2 = e2.lhs().eval(a, g) == e2.rhs().eval(a, g);
    only1 |= in1 && !in2;
    only2 |= in2 && !in1;
  });
  if (!only1 && !only2) return SetRelation::Equal;
  if (!only1) return SetRelation::LeftInRight;
  if (!only2) return SetRelation::RightInLeft;
  return SetRelation::Incomparable;
}

namespace {

// Breadth-first closure of induced term functions over a k-variable
// frame, stratified by the least term size reaching each function.
// Probabilities only depend on the induced functions, and a pair of
// distinct functions is always realized by distinct terms, so pairing
// the classes reproduces the spectrum's value set (1 is seeded).
struct FunctionClosure {
  std::vector<std::vector<std::uint8_t>> tables;
  std::vector<int> min_size;
};

constexpr std::size_t kFunctionBudget = 60000;

FunctionClosure close_functions(const Algebra& g, EnumBounds b) {
  int n = g.order();
  std::size_t frame = 1;
  for (int i = 0; i < b.max_vars; ++i) {
    frame *= n;
    require(frame <= 2'000'000, "frame exceeds budget");
  }
  FunctionClosure fc;
  std::map<std::vector<std::uint8_t>, int> known;
  std::vector<std::vector<int>> by_size(b.max_size + 1);

  auto add = [&](std::vector<std::uint8_t> t, int size) -> bool {
    auto [it, fresh] = known.emplace(std::move(t), (int)fc.tables.size());
    if (!fresh) return false;
    fc.tables.push_back(it->first);
    fc.min_size.push_back(size);
    by_size[size].push_back(it->second);
    if (fc.tables.size() > kFunctionBudget)
      throw std::length_error("function closure exceeds budget");
    return true;
  };

  for (int v = 0; v < b.max_vars; ++v) {
    std::vector<std::uint8_t> proj(frame);
    std::size_t stride = 1;
    for (int i = 0; i < v; ++i) stride *= n;
    for (std::size_t idx = 0; idx < frame; ++idx)
      proj[idx] = static_cast<std::uint8_t>(idx / stride % n);
    add(std::move(proj), 0);
  }
  for (int s = 1; s <= b.max_size; ++s) {
    if (g.signature() == Signature::Unary) {
      for (int fi : by_size[s - 1]) {
        std::vector<std::uint8_t> t(frame);
        for (std::size_t idx = 0; idx < frame; ++idx)
          t[idx] = g.at(fc.tables[fi][idx]);
        add(std::move(t), s);
      }
      continue;
    }
    for (int a = 0; a + 1 <= s; ++a) {
      int bsz = s - 1 - a;
      for (int fi : by_size[a]) {
        for (int gi : by_size[bsz]) {
          std::vector<std::uint8_t> t(frame);
          for (std::size_t idx = 0; idx < frame; ++idx)
            t[idx] = g.at(fc.tables[fi][idx], fc.tables[gi][idx]);
          add(std::move(t), s);
        }
      }
    }
  }
  return fc;
}

}  // namespace

std::set<Prob> spectrum_values(const Algebra& g, EnumBounds b) {
  require(b.max_size >= 0 && b.max_vars >= 1 && b.max_vars <= Term::kMaxVars,
          "bounds out of range");
  FunctionClosure fc = close_functions(g, b);
  std::size_t frame = fc.tables.empty() ? 1 : fc.tables.front().size();
  std::set<Prob> out;
  out.insert(Prob::one());
  out.insert(Prob::of(1, g.order()));
  for (std::size_t i = 0; i < fc.tables.size(); ++i) {
    for (std::size_t j = i + 1; j < fc.tables.size(); ++j) {
      if (fc.min_size[i] + fc.min_size[j] > b.max_size) continue;
      long long hits = 0;
      const std::uint8_t* ti = fc.tables[i].data();
      const std::uint8_t* tj = fc.tables[j].data();
      for (std::size_t idx = 0; idx < frame; ++idx)
        if (ti[idx] == tj[idx]) ++hits;
      out.insert(Prob::of(hits, static_cast<long long>(frame)));
    }
  }
  return out;
}

std::string str(DichotomyBranch b) {
  switch (b) {
    case DichotomyBranch::Identity:
      return "identity";
    case DichotomyBranch::QuasiIdentity:
      return "quasi-identity";
    case DichotomyBranch::Neither:
      return "neither";
  }
  return "neither";
}

std::string str(SetRelation r) {
  switch (r) {
    case SetRelation::Equal:
      return "equal";
    case SetRelation::LeftInRight:
      return "left-in-right";
    case SetRelation::RightInLeft:
      return "right-in-left";
    case SetRelation::Incomparable:
      return "incomparable";
  }
  return "incomparable";
}

}  // namespace minspec
