#include "implicit/text_io.hpp"

#include <array>
#include <cctype>
#include <map>
#include <utility>
#include <vector>

namespace implicit {

namespace {

constexpr std::size_t kMaxExponent = 100000;

using Exponents = std::array<std::size_t, 2>;
using Terms = std::map<Exponents, Rat>;

class Scanner {
 public:
  Scanner(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

  std::size_t pos() const { return pos_; }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool at_end() { return peek() == '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  // poly := [sign] term {sign term}
  Terms poly() {
    Terms out;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      auto [exps, coef] = term();
      if (negative) coef = -coef;
      out[exps] += coef;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer integer() {
    if (!digit_next()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Exponents, Rat> term() {
    Exponents exps{0, 0};
    Rat coef(1);
    factor(exps, coef);
    while (accept('*')) factor(exps, coef);
    return {exps, coef};
  }

  void factor(Exponents& exps, Rat& coef) {
    if (digit_next()) {
      Integer num = integer();
      Integer den(1);
      const std::size_t save = pos_;
      if (accept('/')) {
        if (digit_next()) {
          den = integer();
          if (den == 0) fail("zero denominator in rational literal");
        } else {
          pos_ = save;
        }
      }
      coef *= make_rat(num, den);
      return;
    }
    const char c = peek();
    const auto var = vars_.find(c);
    if (c == '\0' || var == std::string_view::npos) {
      fail(c == '\0' ? std::string("unexpected end of input") : std::string("unexpected '") + c + "'");
    }
    ++pos_;
    std::size_t e = 1;
    if (accept('^')) {
      const Integer big = integer();
      if (big > kMaxExponent) fail("exponent too large");
      e = big.get_ui();
    }
    exps[var] += e;
  }

  std::string_view text_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

UniPoly to_unipoly(const Terms& terms) {
  std::size_t deg = 0;
  for (const auto& [e, c] : terms) {
    if (c != 0) deg = std::max(deg, e[0]);
  }
  std::vector<Rat> coeffs(deg + 1);
  for (const auto& [e, c] : terms) {
    if (c != 0) coeffs[e[0]] += c;
  }
  return UniPoly(std::move(coeffs));
}

Terms side(Scanner& sc) {
  if (sc.accept('(')) {
    Terms t = sc.poly();
    sc.expect(')');
    return t;
  }
  return sc.poly();
}

// Magnitude of c followed by the monomial, with the unit coefficient dropped.
std::string term_body(const Rat& c, const std::string& monomial) {
  const Rat mag = abs(c);
  if (monomial.empty()) return to_string(mag);
  if (mag == 1) return monomial;
  return to_string(mag) + "*" + monomial;
}

void append_term(std::string& out, const Rat& c, const std::string& monomial) {
  const bool negative = sgn(c) < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += term_body(c, monomial);
}

std::string power(char var, std::size_t e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  const std::size_t slash = text.find('/', i);
  auto digits = [&](std::string_view s) {
    if (s.empty()) throw ParseError("expected digits", i);
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("invalid rational literal", i);
    }
    return Integer(std::string(s));
  };
  const Integer num = digits(text.substr(i, slash == std::string_view::npos ? std::string_view::npos : slash - i));
  const Integer den = slash == std::string_view::npos ? Integer(1) : digits(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator", slash);
  const Rat r = make_rat(num, den);
  return negative ? Rat(-r) : r;
}

RationalFunction parse_rational_function(std::string_view text) {
  Scanner sc(text, "t");
  UniPoly num = to_unipoly(side(sc));
  UniPoly den = UniPoly::constant(1);
  if (sc.accept('/')) {
    const std::size_t at = sc.pos();
    den = to_unipoly(side(sc));
    if (den.is_zero()) throw ParseError("zero denominator polynomial", at);
  }
  if (!sc.at_end()) sc.fail("trailing input");
  const UniPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = divide(num, g).quotient;
    den = divide(den, g).quotient;
  }
  return {std::move(num), std::move(den)};
}

std::string render_unipoly(const UniPoly& p, char var) {
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] != 0) append_term(out, c[k], power(var, k));
  }
  return out.empty() ? "0" : out;
}

std::string render_rational_function(const UniPoly& num, const UniPoly& den) {
  if (den == UniPoly::constant(1)) return render_unipoly(num);
  return "(" + render_unipoly(num) + ")/(" + render_unipoly(den) + ")";
}

std::string format_bipoly(const BiPoly& f) {
  std::string out;
  for (std::size_t i = 0; i <= f.x_bound(); ++i) {
    for (std::size_t j = 0; j <= f.y_bound(); ++j) {
      const Rat& c = f.at(i, j);
      if (c == 0) continue;
      std::string mono = power('x', i);
      const std::string yp = power('y', j);
      if (!mono.empty() && !yp.empty()) mono += "*";
      mono += yp;
      append_term(out, c, mono);
    }
  }
  return out.empty() ? "0" : out;
}

BiPoly parse_bipoly(std::string_view text) {
  Scanner sc(text, "xy");
  const Terms terms = sc.poly();
  if (!sc.at_end()) sc.fail("trailing input");
  std::size_t m = 0;
  std::size_t n = 0;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    m = std::max(m, e[0]);
    n = std::max(n, e[1]);
  }
  BiPoly f(m, n);
  for (const auto& [e, c] : terms) {
    if (c != 0) f.at(e[0], e[1]) += c;
  }
  return f;
}

}  // namespace implicit
