#include "minspec/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace minspec {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<std::uint8_t> isocyclic_perm(int n, int block) {
  require(n >= 1, "order must be positive");
  require(block >= 1, "cycle length must be positive");
  require((n - 1) % block == 0, "cycle length must divide order-1");
  std::vector<std::uint8_t> f(n);
  f[0] = 0;
  for (int start = 1; start < n; start += block) {
    for (int off = 0; off < block; ++off) {
      f[start + off] = static_cast<std::uint8_t>(start + (off + 1) % block);
    }
  }
  return f;
}

}  // namespace

Algebra::Algebra(Signature sig, int order, std::vector<std::uint8_t> table)
    : sig_(sig), order_(order), table_(std::move(table)) {}

Algebra Algebra::binary(int order, std::vector<std::uint8_t> table) {
  require(order >= 1 && order <= kMaxOrder, "order out of range");
  require(table.size() == static_cast<std::size_t>(order) * order,
          "binary table must have order^2 entries");
  for (std::uint8_t e : table) require(e < order, "table entry out of range");
  return Algebra(Signature::Binary, order, std::move(table));
}

Algebra Algebra::unary(std::vector<std::uint8_t> map) {
  int order = static_cast<int>(map.size());
  require(order >= 1 && order <= kMaxOrder, "order out of range");
  for (std::uint8_t e : map) require(e < order, "map entry out of range");
  return Algebra(Signature::Unary, order, std::move(map));
}

Algebra Algebra::constant(int order) {
  require(order >= 1 && order <= kMaxOrder, "order out of range");
  return Algebra(Signature::Binary, order,
                 std::vector<std::uint8_t>(static_cast<std::size_t>(order) * order, 0));
}

Algebra Algebra::projection(int order) {
  return arg_left_isocyclic(order, 1);
}

Algebra Algebra::zmod(int order) {
  require(order >= 1 && order <= kMaxOrder, "order out of range");
  std::vector<std::uint8_t> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      t[static_cast<std::size_t>(x) * order + y] =
          static_cast<std::uint8_t>((x + y) % order);
  return Algebra(Signature::Binary, order, std::move(t));
}

Algebra Algebra::zab(int order, int a, int b) {
  require(order >= 1 && order <= kMaxOrder, "order out of range");
  require(a >= 0 && a < order, "coefficient a out of range");
  require(b >= 0 && b < order, "coefficient b out of range");
  std::vector<std::uint8_t> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      t[static_cast<std::size_t>(x) * order + y] =
          static_cast<std::uint8_t>((a * x + b * y) % order);
  return Algebra(Signature::Binary, order, std::move(t));
}

Algebra Algebra::arg_left_isocyclic(int order, int block) {
  auto f = isocyclic_perm(order, block);
  std::vector<std::uint8_t> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      t[static_cast<std::size_t>(x) * order + y] = f[x];
  return Algebra(Signature::Binary, order, std::move(t));
}

Algebra Algebra::arg_right_isocyclic(int order, int block) {
  auto f = isocyclic_perm(order, block);
  std::vector<std::uint8_t> t(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      t[static_cast<std::size_t>(x) * order + y] = f[y];
  return Algebra(Signature::Binary, order, std::move(t));
}

Algebra Algebra::dihedral8() {
  // idx = a for r^a, idx = 4+a for r^a s.
  std::vector<std::uint8_t> t(64);
  auto idx = [](int rot, int ref) { return ((rot % 4) + 4) % 4 + 4 * ref; };
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      t[static_cast<std::size_t>(idx(a, 0)) * 8 + idx(b, 0)] =
          static_cast<std::uint8_t>(idx(a + b, 0));
      t[static_cast<std::size_t>(idx(a, 0)) * 8 + idx(b, 1)] =
          static_cast<std::uint8_t>(idx(a + b, 1));
      t[static_cast<std::size_t>(idx(a, 1)) * 8 + idx(b, 0)] =
          static_cast<std::uint8_t>(idx(a - b, 1));
      t[static_cast<std::size_t>(idx(a, 1)) * 8 + idx(b, 1)] =
          static_cast<std::uint8_t>(idx(a - b, 0));
    }
  }
  return Algebra(Signature::Binary, 8, std::move(t));
}

Algebra Algebra::sheffer() {
  return Algebra(Signature::Binary, 2, {1, 1, 1, 0});
}

Algebra Algebra::and2() {
  return Algebra(Signature::Binary, 2, {0, 0, 0, 1});
}

Algebra Algebra::transposed() const {
  require(sig_ == Signature::Binary, "transpose needs a binary table");
  std::vector<std::uint8_t> t(table_.size());
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      t[static_cast<std::size_t>(x) * order_ + y] = at(y, x);
  return Algebra(sig_, order_, std::move(t));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  require(a.signature() == b.signature(), "signature mismatch");
  int n = a.order(), m = b.order();
  require(n * m <= kMaxOrder, "product order too large");
  // Pair (i, j) is encoded as i*|B| + j.
  if (a.signature() == Signature::Unary) {
    std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        t[static_cast<std::size_t>(i) * m + j] =
            static_cast<std::uint8_t>(a.at(i) * m + b.at(j));
    return Algebra::unary(std::move(t));
  }
  int nm = n * m;
  std::vector<std::uint8_t> t(static_cast<std::size_t>(nm) * nm);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l)
          t[static_cast<std::size_t>(i * m + j) * nm + (k * m + l)] =
              static_cast<std::uint8_t>(a.at(i, k) * m + b.at(j, l));
  return Algebra::binary(nm, std::move(t));
}

Algebra power(const Algebra& a, int exponent) {
  require(exponent >= 1, "exponent must be positive");
  Algebra acc = a;
  for (int i = 1; i < exponent; ++i) acc = direct_product(acc, a);
  return acc;
}

std::string CycleType::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lengths[i]);
  }
  s += ")";
  return s;
}

CycleType cycle_type(const std::vector<std::uint8_t>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> hit(n, false);
  for (std::uint8_t v : perm) {
    require(v < n, "not a permutation");
    require(!hit[v], "not a permutation");
    hit[v] = true;
  }
  CycleType ct;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.rbegin(), ct.lengths.rend());
  auto ones = std::count(ct.lengths.begin(), ct.lengths.end(), 1);
  if (ones >= 1) {
    // drop one fixed point (the 1s sort last), the rest must share a length
    std::vector<int> rest(ct.lengths.begin(), ct.lengths.end() - 1);
    if (rest.empty()) {
      ct.isocyclic = true;
      ct.block = 1;
    } else if (std::all_of(rest.begin(), rest.end(),
                           [&](int l) { return l == rest.front(); })) {
      ct.isocyclic = true;
      ct.block = rest.front();
    }
  }
  return ct;
}

StructureProfile structure_profile(const Algebra& g) {
  require(g.signature() == Signature::Binary, "profile needs a binary table");
  int n = g.order();
  StructureProfile p;
  p.commutative = true;
  p.anticommutative = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.at(x, y) != g.at(y, x)) p.commutative = false;
      if (x != y && g.at(x, y) == g.at(y, x)) p.anticommutative = false;
    }
  }
  p.latin = true;
  for (int x = 0; x < n && p.latin; ++x) {
    std::uint64_t row = 0, col = 0;
    for (int y = 0; y < n; ++y) {
      row |= std::uint64_t{1} << g.at(x, y);
      col |= std::uint64_t{1} << g.at(y, x);
    }
    std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (row != full || col != full) p.latin = false;
  }
  p.associative = true;
  for (int x = 0; x < n && p.associative; ++x)
    for (int y = 0; y < n && p.associative; ++y)
      for (int z = 0; z < n; ++z)
        if (g.at(g.at(x, y), z) != g.at(x, g.at(y, z))) {
          p.associative = false;
          break;
        }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (g.at(e, x) != x || g.at(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) {
      p.neutral = e;
      break;
    }
  }
  for (int x = 0; x < n; ++x)
    if (g.at(x, x) == x) p.idempotents.push_back(x);
  p.diagonal_constant = true;
  for (int x = 1; x < n; ++x)
    if (g.at(x, x) != g.at(0, 0)) p.diagonal_constant = false;
  p.left_alternative = true;
  p.right_alternative = true;
  p.flexible = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.at(x, g.at(x, y)) != g.at(g.at(x, x), y)) p.left_alternative = false;
      if (g.at(g.at(y, x), x) != g.at(y, g.at(x, x))) p.right_alternative = false;
      if (g.at(x, g.at(y, x)) != g.at(g.at(x, y), x)) p.flexible = false;
    }
  }
  p.left_moufang = true;
  for (int x = 0; x < n && p.left_moufang; ++x)
    for (int y = 0; y < n && p.left_moufang; ++y)
      for (int z = 0; z < n; ++z)
        if (g.at(x, g.at(y, g.at(x, z))) != g.at(g.at(g.at(x, y), x), z)) {
          p.left_moufang = false;
          break;
        }
  return p;
}

std::string StructureClass::str() const {
  switch (kind) {
    case StructureKind::Constant:
      return "constant";
    case StructureKind::ArgLeftIsocyclic:
      return "arg-left-isocyclic(" + std::to_string(block) + ")";
    case StructureKind::ArgRightIsocyclic:
      return "arg-right-isocyclic(" + std::to_string(block) + ")";
    case StructureKind::Quasigroup:
      return "quasigroup";
    case StructureKind::Other:
      return "other";
  }
  return "other";
}

StructureClass classify_structure(const Algebra& g) {
  require(g.signature() == Signature::Binary, "classify needs a binary table");
  int n = g.order();
  bool all_equal = std::all_of(g.table().begin(), g.table().end(),
                               [&](std::uint8_t e) { return e == g.table()[0]; });
  if (all_equal) return {StructureKind::Constant, 0};

  auto rows_constant = [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 1; y < n; ++y)
        if (g.at(x, y) != g.at(x, 0)) return false;
    return true;
  };
  auto cols_constant = [&] {
    for (int y = 0; y < n; ++y)
      for (int x = 1; x < n; ++x)
        if (g.at(x, y) != g.at(0, y)) return false;
    return true;
  };
  auto isocyclic_of = [&](std::vector<std::uint8_t> f) -> std::optional<int> {
    std::vector<bool> hit(n, false);
    for (std::uint8_t v : f) {
      if (hit[v]) return std::nullopt;
      hit[v] = true;
    }
    CycleType ct = cycle_type(f);
    if (!ct.isocyclic) return std::nullopt;
    return ct.block;
  };

  if (rows_constant()) {
    std::vector<std::uint8_t> f(n);
    for (int x = 0; x < n; ++x) f[x] = g.at(x, 0);
    if (auto a = isocyclic_of(std::move(f)))
      return {StructureKind::ArgLeftIsocyclic, *a};
    return {StructureKind::Other, 0};
  }
  if (cols_constant()) {
    std::vector<std::uint8_t> f(n);
    for (int y = 0; y < n; ++y) f[y] = g.at(0, y);
    if (auto a = isocyclic_of(std::move(f)))
      return {StructureKind::ArgRightIsocyclic, *a};
    return {StructureKind::Other, 0};
  }
  if (structure_profile(g).latin) return {StructureKind::Quasigroup, 0};
  return {StructureKind::Other, 0};
}

namespace {

// Applies h to a table: result(h(x), h(y)) = h(t(x, y)).
std::vector<std::uint8_t> relabel(const Algebra& g,
                                  const std::vector<std::uint8_t>& h) {
  int n = g.order();
  std::vector<std::uint8_t> out(g.table().size());
  if (g.signature() == Signature::Unary) {
    for (int x = 0; x < n; ++x) out[h[x]] = h[g.at(x)];
    return out;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out[static_cast<std::size_t>(h[x]) * n + h[y]] = h[g.at(x, y)];
  return out;
}

bool maps_onto(const Algebra& a, const Algebra& b,
               const std::vector<std::uint8_t>& h) {
  int n = a.order();
  if (a.signature() == Signature::Unary) {
    for (int x = 0; x < n; ++x)
      if (b.at(h[x]) != h[a.at(x)]) return false;
    return true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (b.at(h[x], h[y]) != h[a.at(x, y)]) return false;
  return true;
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const Algebra& a, const Algebra& b,
                                         bool allow_anti) {
  require(a.signature() == b.signature(), "signature mismatch");
  require(a.order() == b.order(), "order mismatch");
  require(a.order() <= kMaxSearchOrder, "order too large for relabeling search");
  std::optional<Algebra> bt;
  if (allow_anti && a.signature() == Signature::Binary) bt = b.transposed();
  std::vector<std::uint8_t> h(a.order());
  std::iota(h.begin(), h.end(), 0);
  do {
    if (maps_onto(a, b, h)) return IsoWitness{h, false};
    if (bt && maps_onto(a, *bt, h)) return IsoWitness{h, true};
  } while (std::next_permutation(h.begin(), h.end()));
  return std::nullopt;
}

Algebra canonical_form(const Algebra& g, bool allow_anti) {
  require(g.order() <= kMaxSearchOrder, "order too large for relabeling search");
  std::vector<std::uint8_t> best = g.table();
  auto consider = [&](const Algebra& base) {
    std::vector<std::uint8_t> h(base.order());
    std::iota(h.begin(), h.end(), 0);
    do {
      std::vector<std::uint8_t> cand = relabel(base, h);
      if (cand < best) best = std::move(cand);
    } while (std::next_permutation(h.begin(), h.end()));
  };
  consider(g);
  if (allow_anti && g.signature() == Signature::Binary) consider(g.transposed());
  return g.signature() == Signature::Binary
             ? Algebra::binary(g.order(), std::move(best))
             : Algebra::unary(std::move(best));
}

}  // namespace minspec
