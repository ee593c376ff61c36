#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minspec {

enum class Signature : std::uint8_t { Binary, Unary };

// Construction accepts orders up to kMaxOrder (direct products of small
// algebras get large fast); everything that searches over relabelings is
// capped at kMaxSearchOrder so the n! loops stay desk-scale.
inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxSearchOrder = 8;

// A finite algebra with one basic operation on {0, ..., n-1}.
//
// Binary tables are row-major with the row index as the left operand:
// table[x*n + y] = x*y. Unary tables are plain maps: table[x] = f(x).
// Instances are immutable values and safe to share across threads.
class Algebra {
 public:
  static Algebra binary(int order, std::vector<std::uint8_t> table);
  static Algebra unary(std::vector<std::uint8_t> map);

  // x*y = 0.
  static Algebra constant(int order);
  // x*y = x.
  static Algebra projection(int order);
  // x*y = x+y mod n.
  static Algebra zmod(int order);
  // x*y = ax+by mod n, 0 <= a,b < n.
  static Algebra zab(int order, int a, int b);
  // x*y = f(x) resp. x*y = f(y), where f fixes 0 and permutes 1..n-1 in
  // increasing runs of cycle length `block` (block must divide n-1).
  static Algebra arg_left_isocyclic(int order, int block);
  static Algebra arg_right_isocyclic(int order, int block);
  // Dihedral group of order eight. Element i < 4 is the rotation r^i and
  // element 4+i is the reflection r^i*s, so the table is reproducible
  // bit-exactly: (r^a)(r^b) = r^(a+b), (r^a s)(r^b) = r^(a-b) s, etc.
  static Algebra dihedral8();
  // Two-element NAND groupoid.
  static Algebra sheffer();
  // Two-element meet-semilattice.
  static Algebra and2();

  Signature signature() const { return sig_; }
  int order() const { return order_; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  std::uint8_t at(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  std::uint8_t at(int x) const { return table_[x]; }

  // The opposite operation x*y := y*x (binary only).
  Algebra transposed() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;
  friend std::strong_ordering operator<=>(const Algebra&,
                                          const Algebra&) = default;

 private:
  Algebra(Signature sig, int order, std::vector<std::uint8_t> table);

  Signature sig_;
  int order_;
  std::vector<std::uint8_t> table_;
};

Algebra direct_product(const Algebra& a, const Algebra& b);
Algebra power(const Algebra& a, int exponent);

// Cycle structure of a permutation of {0, ..., n-1}.
//
// `isocyclic` means the type is (1, a, ..., a): at least one fixed point
// and, with one fixed point removed, all remaining cycles of one common
// length a (an empty remainder counts, with a = 1).
struct CycleType {
  std::vector<int> lengths;  // non-increasing
  bool isocyclic = false;
  int block = 0;  // the common length a when isocyclic

  friend bool operator==(const CycleType&, const CycleType&) = default;
  std::string str() const;
};

CycleType cycle_type(const std::vector<std::uint8_t>& perm);

struct StructureProfile {
  bool commutative = false;
  bool anticommutative = false;  // x*y != y*x for all x != y
  bool latin = false;            // rows and columns are permutations
  bool associative = false;
  std::optional<int> neutral;
  std::vector<int> idempotents;
  bool diagonal_constant = false;
  bool left_alternative = false;   // x(xy) = (xx)y
  bool right_alternative = false;  // (yx)x = y(xx)
  bool flexible = false;           // x(yx) = (xy)x
  bool left_moufang = false;       // x(y(xz)) = ((xy)x)z
};

StructureProfile structure_profile(const Algebra& g);

enum class StructureKind : std::uint8_t {
  Constant,
  ArgLeftIsocyclic,   // x*y = f(x), f an isocyclic permutation
  ArgRightIsocyclic,  // x*y = f(y)
  Quasigroup,
  Other,
};

struct StructureClass {
  StructureKind kind = StructureKind::Other;
  int block = 0;  // cycle length for the isocyclic kinds

  friend bool operator==(const StructureClass&, const StructureClass&) =
      default;
  std::string str() const;
};

StructureClass classify_structure(const Algebra& g);

struct IsoWitness {
  std::vector<std::uint8_t> map;
  bool anti = false;  // witness maps onto the transpose of the target
};

// Searches all n! relabelings for h with h(x*y) = h(x)*h(y); with
// allow_anti also against the transposed target. First witness in
// lexicographic permutation order.
std::optional<IsoWitness> are_isomorphic(const Algebra& a, const Algebra& b,
                                         bool allow_anti);

// Lexicographically least table over all relabelings (and over
// transpose-then-relabel when allow_anti). Idempotent, and two algebras
// have equal canonical forms exactly when are_isomorphic succeeds.
Algebra canonical_form(const Algebra& g, bool allow_anti);

}  // namespace minspec
