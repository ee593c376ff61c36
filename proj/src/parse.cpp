#include "minspec/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace minspec {

namespace {

bool is_var_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_var_tail(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

class EquationParser {
 public:
  explicit EquationParser(std::string_view text) : text_(text) {}

  Equation run() {
    Term lhs = parse_term();
    expect_equals();
    Term rhs = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return Equation::canonical(lhs, rhs);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_equals() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      return;
    }
    // UTF-8 for the almost-equal sign
    if (pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0x89 &&
        static_cast<unsigned char>(text_[pos_ + 2]) == 0x88) {
      pos_ += 3;
      return;
    }
    fail("expected '=' between the two sides");
  }

  Term parse_term() {
    Term t = parse_factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        std::size_t at = pos_;
        ++pos_;
        if (saw_unary_) {
          pos_ = at;
          fail("cannot mix 'f' and '*' in one equation");
        }
        saw_binary_ = true;
        Term rhs = parse_factor();
        t = Term::apply2(t, rhs);
        continue;
      }
      return t;
    }
  }

  Term parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = parse_term();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (!is_var_start(c)) fail("expected a variable, 'f(...)' or '('");
    std::size_t start = pos_;
    std::size_t end = pos_ + 1;
    while (end < text_.size() && is_var_tail(text_[end])) ++end;
    std::string name(text_.substr(start, end - start));
    if (name == "f" && end < text_.size() && text_[end] == '(') {
      if (saw_binary_) fail("cannot mix 'f' and '*' in one equation");
      saw_unary_ = true;
      pos_ = end + 1;
      Term t = parse_term();
      if (!eat(')')) fail("expected ')'");
      return Term::apply1(t);
    }
    pos_ = end;
    auto it = vars_.find(name);
    if (it != vars_.end()) return Term::var(it->second);
    if (static_cast<int>(vars_.size()) >= Term::kMaxVars) {
      pos_ = start;
      fail("too many distinct variables (at most 4)");
    }
    int idx = static_cast<int>(vars_.size());
    vars_.emplace(name, idx);
    return Term::var(idx);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, int> vars_;
  bool saw_unary_ = false;
  bool saw_binary_ = false;
};

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view text) : text_(text) {}

  Algebra run() {
    Algebra g = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
      ++pos_;
    if (pos_ == start) fail("expected an algebra spec");
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Algebra parse_spec() {
    std::size_t at = pos_;
    std::string head = word();
    try {
      if (head == "Z") return Algebra::zmod(number());
      if (head == "Zab") {
        int n = number(), a = number(), b = number();
        return Algebra::zab(n, a, b);
      }
      if (head == "C") return Algebra::constant(number());
      if (head == "ILeft") {
        int n = number(), a = number();
        return Algebra::arg_left_isocyclic(n, a);
      }
      if (head == "IRight") {
        int n = number(), a = number();
        return Algebra::arg_right_isocyclic(n, a);
      }
      if (head == "D4") return Algebra::dihedral8();
      if (head == "sheffer") return Algebra::sheffer();
      if (head == "and2") return Algebra::and2();
      if (head == "proj") return Algebra::projection(number());
      if (head == "prod") {
        expect('(');
        Algebra a = parse_spec();
        expect(',');
        Algebra b = parse_spec();
        expect(')');
        return direct_product(a, b);
      }
      if (head == "pow") {
        expect('(');
        Algebra a = parse_spec();
        expect(',');
        int m = number();
        expect(')');
        return power(a, m);
      }
      if (head == "groupoid") return explicit_table(Signature::Binary);
      if (head == "unary") return explicit_table(Signature::Unary);
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, e.what());
    }
    pos_ = at;
    fail("unknown algebra spec '" + head + "'");
  }

  Algebra explicit_table(Signature sig) {
    std::size_t at = pos_;
    int n = number();
    if (n < 1 || n > kMaxOrder) {
      pos_ = at;
      fail("order out of range");
    }
    std::size_t entries =
        sig == Signature::Binary ? static_cast<std::size_t>(n) * n : n;
    std::vector<std::uint8_t> table;
    table.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      skip_ws();
      std::size_t here = pos_;
      int v = number();
      if (v < 0 || v >= n) {
        pos_ = here;
        fail("table entry out of range");
      }
      table.push_back(static_cast<std::uint8_t>(v));
    }
    return sig == Signature::Binary ? Algebra::binary(n, std::move(table))
                                    : Algebra::unary(std::move(table));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_term(const std::vector<std::uint8_t>& code, std::size_t& pos,
                 std::string& out, bool top) {
  static const char* kNames[Term::kMaxVars] = {"x", "y", "z", "w"};
  std::uint8_t c = code[pos++];
  if (c < Term::kOp1) {
    out += kNames[c];
    return;
  }
  if (c == Term::kOp1) {
    out += "f(";
    render_term(code, pos, out, true);
    out += ")";
    return;
  }
  if (!top) out += "(";
  render_term(code, pos, out, false);
  out += "*";
  render_term(code, pos, out, false);
  if (!top) out += ")";
}

}  // namespace

Equation parse_equation(std::string_view text) {
  return EquationParser(text).run();
}

Algebra parse_algebra(std::string_view text) {
  return AlgebraParser(text).run();
}

std::string render(const Equation& e) {
  std::string out;
  std::size_t pos = 0;
  render_term(e.lhs().code(), pos, out, true);
  out += " = ";
  pos = 0;
  render_term(e.rhs().code(), pos, out, true);
  return out;
}

std::string render(const Algebra& g) {
  std::ostringstream out;
  int n = g.order();
  if (g.signature() == Signature::Unary) {
    out << "unary " << n << "\n";
    for (int x = 0; x < n; ++x) out << (x ? " " : "") << int(g.at(x));
    return out.str();
  }
  out << "groupoid " << n;
  for (int x = 0; x < n; ++x) {
    out << "\n";
    for (int y = 0; y < n; ++y) out << (y ? " " : "") << int(g.at(x, y));
  }
  return out.str();
}

}  // namespace minspec
