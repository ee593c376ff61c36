#include "minspec/term.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace minspec {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int eval_at(const std::vector<std::uint8_t>& code, std::size_t& pos,
            const std::uint8_t* assignment, const Algebra& g) {
  std::uint8_t b = code[pos++];
  if (b < Term::kOp1) return assignment[b];
  if (b == Term::kOp1) return g.at(eval_at(code, pos, assignment, g));
  int l = eval_at(code, pos, assignment, g);
  int r = eval_at(code, pos, assignment, g);
  return g.at(l, r);
}

Term rebuild(const std::vector<std::uint8_t>& code, std::size_t& pos) {
  std::uint8_t c = code[pos++];
  if (c < Term::kOp1) return Term::var(c);
  if (c == Term::kOp1) return Term::apply1(rebuild(code, pos));
  Term left = rebuild(code, pos);
  Term right = rebuild(code, pos);
  return Term::apply2(left, right);
}

// Variables of the concatenated pair (a, b) renumbered by first
// occurrence; first-occurrence numbering is the lexicographically least
// renaming of the concatenation, so taking the smaller of the two side
// orders below yields a true orbit minimum under renaming plus swap.
struct NumberedPair {
  std::vector<std::uint8_t> lhs, rhs;
  int vars = 0;
};

NumberedPair renumber(const std::vector<std::uint8_t>& a,
                      const std::vector<std::uint8_t>& b) {
  NumberedPair out;
  out.lhs.reserve(a.size());
  out.rhs.reserve(b.size());
  int map[Term::kMaxVars];
  std::fill(std::begin(map), std::end(map), -1);
  int next = 0;
  auto rewrite = [&](const std::vector<std::uint8_t>& src,
                     std::vector<std::uint8_t>& dst) {
    for (std::uint8_t c : src) {
      if (c >= Term::kOp1) {
        dst.push_back(c);
        continue;
      }
      if (map[c] < 0) map[c] = next++;
      dst.push_back(static_cast<std::uint8_t>(map[c]));
    }
  };
  rewrite(a, out.lhs);
  rewrite(b, out.rhs);
  out.vars = next;
  return out;
}

}  // namespace

Term Term::var(int index) {
  require(index >= 0 && index < kMaxVars, "variable index out of range");
  Term t;
  t.code_ = {static_cast<std::uint8_t>(index)};
  return t;
}

Term Term::apply1(const Term& child) {
  require(!child.uses_op2(), "cannot mix unary and binary symbols");
  Term t;
  t.code_.reserve(child.code_.size() + 1);
  t.code_.push_back(kOp1);
  t.code_.insert(t.code_.end(), child.code_.begin(), child.code_.end());
  return t;
}

Term Term::apply2(const Term& left, const Term& right) {
  require(!left.uses_op1() && !right.uses_op1(),
          "cannot mix unary and binary symbols");
  Term t;
  t.code_.reserve(left.code_.size() + right.code_.size() + 1);
  t.code_.push_back(kOp2);
  t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
  t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
  return t;
}

int Term::op_count() const {
  return static_cast<int>(
      std::count_if(code_.begin(), code_.end(),
                    [](std::uint8_t c) { return c >= kOp1; }));
}

bool Term::uses_op1() const {
  return std::find(code_.begin(), code_.end(), kOp1) != code_.end();
}

bool Term::uses_op2() const {
  return std::find(code_.begin(), code_.end(), kOp2) != code_.end();
}

int Term::eval(const std::uint8_t* assignment, const Algebra& g) const {
  std::size_t pos = 0;
  return eval_at(code_, pos, assignment, g);
}

Equation Equation::canonical(const Term& lhs, const Term& rhs) {
  NumberedPair p = renumber(lhs.code(), rhs.code());
  NumberedPair q = renumber(rhs.code(), lhs.code());
  NumberedPair& best =
      (q.lhs < p.lhs || (q.lhs == p.lhs && q.rhs < p.rhs)) ? q : p;
  Term l, r;
  l.code_ = std::move(best.lhs);
  r.code_ = std::move(best.rhs);
  return Equation(std::move(l), std::move(r), best.vars);
}

bool Equation::compatible(Signature sig) const {
  if (sig == Signature::Binary) return !lhs_.uses_op1() && !rhs_.uses_op1();
  return !lhs_.uses_op2() && !rhs_.uses_op2();
}

std::strong_ordering Equation::operator<=>(const Equation& o) const {
  if (auto c = op_count() <=> o.op_count(); c != 0) return c;
  if (auto c = lhs_ <=> o.lhs_; c != 0) return c;
  return rhs_ <=> o.rhs_;
}

Equation specialize(const Equation& e, int i, int j) {
  require(i != j, "variables to identify must differ");
  require(i >= 0 && i < e.num_vars() && j >= 0 && j < e.num_vars(),
          "variable index out of range");
  auto subst = [&](const std::vector<std::uint8_t>& code) {
    std::vector<std::uint8_t> out = code;
    for (std::uint8_t& c : out)
      if (c < Term::kOp1 && c == j) c = static_cast<std::uint8_t>(i);
    return out;
  };
  std::vector<std::uint8_t> l = subst(e.lhs().code());
  std::vector<std::uint8_t> r = subst(e.rhs().code());
  std::size_t pos = 0;
  Term left = rebuild(l, pos);
  pos = 0;
  Term right = rebuild(r, pos);
  return Equation::canonical(left, right);
}

Equation mirror(const Equation& e) {
  require(e.compatible(Signature::Binary), "mirror needs a binary equation");
  struct Flip {
    static Term go(const std::vector<std::uint8_t>& code, std::size_t& pos) {
      std::uint8_t c = code[pos++];
      if (c < Term::kOp1) return Term::var(c);
      Term left = go(code, pos);
      Term right = go(code, pos);
      return Term::apply2(right, left);
    }
  };
  std::size_t pos = 0;
  Term l = Flip::go(e.lhs().code(), pos);
  pos = 0;
  Term r = Flip::go(e.rhs().code(), pos);
  return Equation::canonical(l, r);
}

std::vector<Equation> enumerate_equations(Signature sig, EnumBounds bounds) {
  require(bounds.max_size >= 0, "max_size must be non-negative");
  require(bounds.max_vars >= 1 && bounds.max_vars <= Term::kMaxVars,
          "max_vars out of range");
  int cap = sig == Signature::Binary ? kMaxEnumSizeBinary : kMaxEnumSizeUnary;
  require(bounds.max_size <= cap, "max_size exceeds the enumeration cap");

  // raw terms by operation count, variables drawn from the full range
  std::vector<std::vector<Term>> by_size(bounds.max_size + 1);
  for (int v = 0; v < bounds.max_vars; ++v) by_size[0].push_back(Term::var(v));
  for (int s = 1; s <= bounds.max_size; ++s) {
    if (sig == Signature::Unary) {
      for (const Term& c : by_size[s - 1]) by_size[s].push_back(Term::apply1(c));
      continue;
    }
    for (int ls = 0; ls < s; ++ls)
      for (const Term& l : by_size[ls])
        for (const Term& r : by_size[s - 1 - ls])
          by_size[s].push_back(Term::apply2(l, r));
  }

  std::set<Equation> out;
  for (int s1 = 0; s1 <= bounds.max_size; ++s1) {
    for (int s2 = 0; s1 + s2 <= bounds.max_size; ++s2) {
      for (const Term& l : by_size[s1]) {
        for (const Term& r : by_size[s2]) {
          if (l == r) continue;
          Equation e = Equation::canonical(l, r);
          if (e.lhs() == e.rhs()) continue;
          out.insert(std::move(e));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace minspec
