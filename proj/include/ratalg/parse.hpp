#ifndef RATALG_PARSE_HPP
#define RATALG_PARSE_HPP

#include <cctype>
#include <string>

#include "ratalg/birat.hpp"
#include "ratalg/multipoly.hpp"

namespace ratalg {

namespace detail {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  explicit Scanner(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("syntax error at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected a number");
    return Int(s.substr(start, pos - start));
  }

  long exponent() {
    if (!eat('^')) return 1;
    bool neg = eat('-');
    Int e = integer();
    if (e > 256) throw cap_exceeded("exponent cap exceeded");
    long v = (long)e;
    return neg ? -v : v;
  }

  // trailing digits select the variable; bare x is the first
  int variable_index() {
    ++pos;  // consumed 'x'
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) return 1;
    Int i(s.substr(start, pos - start));
    if (i < 1 || i > 9) fail("variable index out of range");
    return (int)i;
  }
};

// expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := atom ('^' int)?; atom := number | variable | '(' expr ')' | '-' factor
template <typename Algebra>
struct ExprParser {
  Scanner sc;
  Algebra& alg;

  ExprParser(const std::string& text, Algebra& a) : sc(text), alg(a) {}

  typename Algebra::Value run() {
    auto e = expr();
    if (sc.peek() != '\0') sc.fail("unexpected trailing input");
    return e;
  }

  typename Algebra::Value expr() {
    auto e = term();
    while (true) {
      if (sc.eat('+'))
        e = alg.add(e, term());
      else if (sc.eat('-'))
        e = alg.sub(e, term());
      else
        return e;
    }
  }

  typename Algebra::Value term() {
    auto e = factor();
    while (true) {
      if (sc.eat('*'))
        e = alg.mul(e, factor());
      else if (sc.eat('/'))
        e = alg.div(e, factor(), sc);
      else
        return e;
    }
  }

  typename Algebra::Value factor() {
    auto a = atom();
    long e = sc.exponent();
    return alg.pow(a, e, sc);
  }

  typename Algebra::Value atom() {
    char c = sc.peek();
    if (c == '(') {
      ++sc.pos;
      auto e = expr();
      if (!sc.eat(')')) sc.fail("expected )");
      return e;
    }
    if (c == '-') {
      ++sc.pos;
      return alg.neg(factor());
    }
    if (std::isdigit((unsigned char)c)) return alg.number(sc.integer());
    if (c == 'x') return alg.variable(sc.variable_index(), sc);
    sc.fail("expected a value");
  }
};

struct BiRatAlgebra {
  using Value = BiRat;
  BiRat add(const BiRat& a, const BiRat& b) { return a + b; }
  BiRat sub(const BiRat& a, const BiRat& b) { return a - b; }
  BiRat mul(const BiRat& a, const BiRat& b) { return a * b; }
  BiRat neg(const BiRat& a) { return -a; }
  BiRat number(const Int& n) { return BiRat(Scalar(Rat(n))); }
  BiRat variable(int i, Scanner& sc) {
    if (i > 2) sc.fail("only x1 and x2 are available");
    return i == 1 ? BiRat::x1() : BiRat::x2();
  }
  BiRat div(const BiRat& a, const BiRat& b, Scanner& sc) {
    if (b.num().is_zero()) sc.fail("division by the zero polynomial");
    return a / b;
  }
  BiRat pow(const BiRat& a, long e, Scanner& sc) {
    if (e < 0 && a.num().is_zero()) sc.fail("division by the zero polynomial");
    BiRat r(1), base = e < 0 ? BiRat(1) / a : a;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
    return r;
  }
};

struct MultiPolyAlgebra {
  using Value = MultiPoly;
  int arity;
  MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
  MultiPoly neg(const MultiPoly& a) { return MultiPoly::constant(arity, -1) * a; }
  MultiPoly number(const Int& n) { return MultiPoly::constant(arity, Rat(n)); }
  MultiPoly variable(int i, Scanner& sc) {
    if (i > arity) sc.fail("variable index out of range");
    return MultiPoly::variable(arity, i - 1);
  }
  MultiPoly div(const MultiPoly& a, const MultiPoly& b, Scanner& sc) {
    if (b.total_degree() > 0 || b.is_zero()) sc.fail("division only by nonzero constants");
    Rat c = b.coeff(Mono(arity, 0));
    return MultiPoly::constant(arity, 1 / c) * a;
  }
  MultiPoly pow(const MultiPoly& a, long e, Scanner& sc) {
    if (e < 0) sc.fail("negative powers are not polynomial");
    MultiPoly r = MultiPoly::constant(arity, 1);
    for (long k = 0; k < e; ++k) r = r * a;
    return r;
  }
};

}  // namespace detail

inline BiRat parse_birat(const std::string& text) {
  detail::BiRatAlgebra alg;
  return detail::ExprParser<detail::BiRatAlgebra>(text, alg).run();
}

// the second variable must be absent; bare x means the first variable
inline UniRat to_unirat(const BiRat& f) {
  if (f.num().deg2() > 0 || f.den().deg2() > 0) throw input_error("expected a one-variable expression");
  auto uni = [](const BiPoly& p) {
    std::vector<Scalar> c(p.deg1() + 1, Scalar(0));
    for (const auto& [e, s] : p.terms()) c[e.first] = s;
    return UniPoly(c);
  };
  return UniRat(uni(f.num()), uni(f.den()));
}

inline UniRat parse_unirat(const std::string& text) { return to_unirat(parse_birat(text)); }

// highest variable index seen anywhere in the text
inline int scan_arity(const std::string& text) {
  int arity = 0;
  for (size_t i = 0; i < text.size(); ++i)
    if (text[i] == 'x') {
      size_t j = i + 1, start = j;
      while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
      int idx = j == start ? 1 : std::stoi(text.substr(start, j - start));
      arity = std::max(arity, idx);
      i = j - 1;
    }
  return arity;
}

inline MultiPoly parse_multipoly(const std::string& text, int arity) {
  detail::MultiPolyAlgebra alg{arity};
  return detail::ExprParser<detail::MultiPolyAlgebra>(text, alg).run();
}

namespace detail {

inline std::string rat_text(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

inline std::string scalar_text(const Scalar& c) {
  if (c.is_rational()) return rat_text(c.as_rat());
  Rat b = c.rat_b();
  std::string root = (b == 1 || b == -1 ? "" : rat_text(b < 0 ? -b : b) + "*") + "sqrt(" + c.delta().str() + ")";
  if (c.rat_a() == 0) return b < 0 ? "-" + root : root;
  return "(" + rat_text(c.rat_a()) + (b < 0 ? " - " : " + ") + root + ")";
}

// one monomial with its sign split off for sum assembly
inline std::pair<bool, std::string> term_text(const Scalar& c, const std::string& vars) {
  bool neg = c.is_rational() && c.as_rat() < 0;
  Scalar a = neg ? -c : c;
  std::string body;
  if (vars.empty())
    body = scalar_text(a);
  else if (a == Scalar(1))
    body = vars;
  else
    body = scalar_text(a) + "*" + vars;
  return {neg, body};
}

inline std::string join_terms(std::vector<std::pair<bool, std::string>> parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i == 0)
      out += parts[i].first ? "-" : "";
    else
      out += parts[i].first ? " - " : " + ";
    out += parts[i].second;
  }
  return out;
}

inline std::string power_text(const std::string& name, int e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

}  // namespace detail

// descending grlex term order; output reparses to the same polynomial
inline std::string print_bipoly(const BiPoly& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [e, c] : p.terms()) {
    std::string v1 = detail::power_text("x1", e.first), v2 = detail::power_text("x2", e.second);
    std::string vars = v1.empty() ? v2 : v2.empty() ? v1 : v1 + "*" + v2;
    parts.push_back(detail::term_text(c, vars));
  }
  return detail::join_terms(std::move(parts));
}

// integer coefficients with overall gcd 1; the denominator keeps a positive
// leading coefficient, so parsing the text recovers f exactly
inline std::string print_birat(const BiRat& f) {
  bool rational = true;
  Int lcm = 1;
  auto scan = [&](const BiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      (void)e;
      if (!c.is_rational()) rational = false;
      else lcm = boost::multiprecision::lcm(lcm, rat_den(c.as_rat()));
    }
  };
  scan(f.num());
  scan(f.den());
  if (!rational) {
    if (f.den() == BiPoly(1)) return print_bipoly(f.num());
    return "(" + print_bipoly(f.num()) + ")/(" + print_bipoly(f.den()) + ")";
  }
  Int g = 0;
  auto content = [&](const BiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      (void)e;
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(rat_num(c.as_rat() * Rat(lcm))));
    }
  };
  content(f.num());
  content(f.den());
  if (g == 0) g = 1;
  BiPoly scale = BiPoly::monomial(0, 0, Scalar(Rat(lcm, g)));
  BiPoly num = f.num() * scale, den = f.den() * scale;
  if (den == BiPoly(1)) return print_bipoly(num);
  return "(" + print_bipoly(num) + ")/(" + print_bipoly(den) + ")";
}

// descending powers of x
inline std::string print_unipoly(const UniPoly& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (int k = p.degree(); k >= 0; --k)
    if (!p.coeff(k).is_zero()) parts.push_back(detail::term_text(p.coeff(k), detail::power_text("x", k)));
  return detail::join_terms(std::move(parts));
}

inline std::string print_unirat(const UniRat& f) {
  if (f.den() == UniPoly(Scalar(1))) return print_unipoly(f.num());
  return "(" + print_unipoly(f.num()) + ")/(" + print_unipoly(f.den()) + ")";
}

// descending exponent-vector order with x1..xn names
inline std::string print_multipoly(const MultiPoly& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [m, c] : p.terms()) {
    std::string vars;
    for (int i = 0; i < (int)m.size(); ++i)
      if (m[i] > 0) {
        if (!vars.empty()) vars += "*";
        vars += detail::power_text("x" + std::to_string(i + 1), m[i]);
      }
    parts.push_back(detail::term_text(Scalar(c), vars));
  }
  return detail::join_terms(std::move(parts));
}

}  // namespace ratalg

#endif
