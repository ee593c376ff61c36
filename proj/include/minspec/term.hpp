#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "minspec/algebra.hpp"

namespace minspec {

// A term over one binary (or one unary) operation symbol and variables
// x0, x1, ... It is stored as a pre-order byte string: bytes below kOp1
// are variable indices, kOp1 marks a unary node, kOp2 a binary node.
// The byte order makes plain variables sort before compound terms, which
// fixes the total order used to orient equations.
class Term {
 public:
  static constexpr std::uint8_t kOp1 = 0xFE;
  static constexpr std::uint8_t kOp2 = 0xFF;
  static constexpr int kMaxVars = 4;

  static Term var(int index);
  static Term apply1(const Term& child);
  static Term apply2(const Term& left, const Term& right);

  // number of operation nodes (the size metric for bounds)
  int op_count() const;
  bool uses_op1() const;
  bool uses_op2() const;
  const std::vector<std::uint8_t>& code() const { return code_; }

  // bottom-up evaluation through the operation table
  int eval(const std::uint8_t* assignment, const Algebra& g) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  friend class Equation;
  Term() = default;
  std::vector<std::uint8_t> code_;
};

// An equation t = t' with variables renumbered by first occurrence
// (scanning lhs then rhs) and sides oriented so lhs <= rhs in term
// order; the two candidate orientations are compared and the smaller
// kept, which makes equations equal exactly when they agree up to
// renaming and side swap.
class Equation {
 public:
  static Equation canonical(const Term& lhs, const Term& rhs);

  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  int num_vars() const { return num_vars_; }
  int op_count() const { return lhs_.op_count() + rhs_.op_count(); }
  bool compatible(Signature sig) const;

  friend bool operator==(const Equation&, const Equation&) = default;
  // enumeration order: total operation count, then lhs, then rhs
  std::strong_ordering operator<=>(const Equation& o) const;

 private:
  Equation(Term l, Term r, int k)
      : lhs_(std::move(l)), rhs_(std::move(r)), num_vars_(k) {}
  Term lhs_, rhs_;
  int num_vars_ = 0;
};

// Identifies variable j with variable i and renumbers; the variable
// count drops by exactly one.
Equation specialize(const Equation& e, int i, int j);

// Reverses the operand order of every binary node on both sides.
Equation mirror(const Equation& e);

struct EnumBounds {
  int max_size = 3;  // op_count(lhs) + op_count(rhs) <= max_size
  int max_vars = 3;

  friend bool operator==(const EnumBounds&, const EnumBounds&) = default;
};

// Hard caps keeping the pair enumeration desk-scale.
inline constexpr int kMaxEnumSizeBinary = 6;
inline constexpr int kMaxEnumSizeUnary = 24;

// Every canonical equation within the bounds, each exactly once, with
// syntactically identical sides excluded, in a fixed deterministic
// order (ascending total size, then term order).
std::vector<Equation> enumerate_equations(Signature sig, EnumBounds bounds);

}  // namespace minspec
