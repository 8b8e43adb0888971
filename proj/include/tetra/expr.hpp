#pragma once

// Bracket expressions over g, the Onsager algebra and the central extension.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] INT)?
//   primary := INT | SYMBOL | '(' expr ')' | '[' expr ',' expr ']'
//            | 'ad' '(' expr ')' '^' INT '(' expr ')'
//            | PERM '(' expr ')' | GEN '(' expr ')'
//
// PERM is cycle notation with no spaces inside a cycle, e.g. (12)(30);
// GEN is one of tau1, tau2, phi, tau, id. Ring scalars are written to the
// right of algebra symbols, as in u2*(-t).

#include "tetra/central_extension.hpp"
#include "tetra/loop.hpp"
#include "tetra/onsager.hpp"
#include "tetra/ring.hpp"
#include "tetra/s4.hpp"

#include <cctype>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tetra::expr {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(message(position, expected, found)), position_(position), expected_(std::move(expected)) {}
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string message(std::size_t pos, const std::vector<std::string>& exp, const std::string& found) {
    std::string s = "parse error at position " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < exp.size(); ++i) s += (i ? " or " : "") + exp[i];
    return s + ", found " + found;
  }
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownSymbol : public Error {
 public:
  UnknownSymbol(std::size_t position, const std::string& name, const std::string& why = "unknown symbol")
      : Error(why + " '" + name + "' at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class ContextError : public Error {
 public:
  using Error::Error;
};

enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow, Bracket, AdPower, Apply };

/// Syntax tree. Number holds a nonnegative integer, Pow and AdPower keep the
/// exponent in `exponent`, Apply keeps its permutation in `perm`.
struct Expr {
  Kind kind = Kind::Number;
  Rat number = 0;
  std::string name;
  long exponent = 0;
  Perm4 perm;
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;

  static Expr num(Rat n) {
    Expr e;
    e.number = std::move(n);
    return e;
  }
  static Expr sym(std::string n) {
    Expr e;
    e.kind = Kind::Symbol;
    e.name = std::move(n);
    return e;
  }
  static Expr node(Kind k, std::vector<Expr> args, long exponent = 0) {
    Expr e;
    e.kind = k;
    e.args = std::move(args);
    e.exponent = exponent;
    return e;
  }
  static Expr apply(Perm4 p, Expr arg) {
    Expr e = node(Kind::Apply, {std::move(arg)});
    e.perm = p;
    return e;
  }
};

/// Text that parses back to the same tree.
inline std::string render(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + render(e.args[0]) + " " + op + " " + render(e.args[1]) + ")"; };
  switch (e.kind) {
    case Kind::Number: return tetra::to_string(e.number);
    case Kind::Symbol: return e.name;
    case Kind::Add: return bin("+");
    case Kind::Sub: return bin("-");
    case Kind::Mul: return bin("*");
    case Kind::Div: return bin("/");
    case Kind::Neg: return "-" + render(e.args[0]);
    case Kind::Pow: {
      const Expr& b = e.args[0];
      std::string base = render(b);
      if (b.kind == Kind::Neg || b.kind == Kind::Pow) base = "(" + base + ")";
      return base + "^" + std::to_string(e.exponent);
    }
    case Kind::Bracket: return "[" + render(e.args[0]) + ", " + render(e.args[1]) + "]";
    case Kind::AdPower:
      return "ad(" + render(e.args[0]) + ")^" + std::to_string(e.exponent) + "(" + render(e.args[1]) + ")";
    case Kind::Apply: {
      // "(03)(12)" would read as one more cycle, so bare numbers get extra parentheses.
      std::string arg = render(e.args[0]);
      if (e.args[0].kind == Kind::Number) arg = "(" + arg + ")";
      return e.perm.to_string() + "(" + arg + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Lexer and parser.

namespace detail {

struct Token {
  enum Type { Number, Ident, Punct, End } type;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (digit(i)) {
      std::size_t j = i;
      while (digit(j)) ++j;
      out.push_back({Token::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        if (s[j] == '_' && j + 1 < s.size() && s[j + 1] == '-' && digit(j + 2)) ++j;
        ++j;
      }
      while (j < s.size() && s[j] == '\'') ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
      out.push_back({Token::Punct, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(i, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

/// Accepts the symbol names of all three contexts; throws UnknownSymbol otherwise.
inline void validate_symbol(const std::string& n, std::size_t pos) {
  static const std::regex simple(R"(t|t'|t''|u[0-2]|v[0-2]|x|y|z|K[01])");
  static const std::regex pair(R"([XYC]_([0-3])([0-3]))");
  static const std::regex a_index(R"(A_-?[0-9]+)");
  static const std::regex g_index(R"(G_([0-9]+))");
  std::smatch m;
  if (std::regex_match(n, simple) || std::regex_match(n, a_index)) return;
  if (std::regex_match(n, m, pair)) {
    if (m[1] != m[2]) return;
    throw UnknownSymbol(pos, n, "generator indices must differ in");
  }
  if (std::regex_match(n, m, g_index)) {
    if (m[1].str().find_first_not_of('0') != std::string::npos) return;
    throw UnknownSymbol(pos, n, "G_l needs l >= 1 in");
  }
  throw UnknownSymbol(pos, n);
}

inline std::optional<Perm4> named_gen(const std::string& n) {
  if (n == "tau1") return Perm4::tau1();
  if (n == "tau2") return Perm4::tau2();
  if (n == "phi") return Perm4::phi();
  if (n == "tau") return Perm4::tau();
  if (n == "id") return Perm4::identity();
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().type != Token::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  bool at(const char* p, std::size_t k = 0) const { return peek(k).type == Token::Punct && peek(k).text == p; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.type == Token::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, std::move(expected), found);
  }

  void expect(const char* p) {
    if (!at(p)) fail({"'" + std::string(p) + "'"});
    ++i_;
  }

  long integer(bool allow_negative) {
    bool neg = false;
    if (allow_negative && at("-")) {
      neg = true;
      ++i_;
    }
    if (peek().type != Token::Number) fail({"integer"});
    const Token& t = peek();
    if (t.text.size() > 9) throw ParseError(t.pos, "exponent too large");
    ++i_;
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  Expr expr() {
    Expr e = term();
    while (at("+") || at("-")) {
      Kind k = at("+") ? Kind::Add : Kind::Sub;
      ++i_;
      e = Expr::node(k, {std::move(e), term()});
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (at("*") || at("/")) {
      Kind k = at("*") ? Kind::Mul : Kind::Div;
      ++i_;
      e = Expr::node(k, {std::move(e), unary()});
    }
    return e;
  }

  Expr unary() {
    if (at("-")) {
      ++i_;
      return Expr::node(Kind::Neg, {unary()});
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (at("^")) {
      ++i_;
      long n = integer(true);
      return Expr::node(Kind::Pow, {std::move(base)}, n);
    }
    return base;
  }

  /// Argument list of exactly one expression in parentheses.
  Expr single_argument(const std::string& what) {
    expect("(");
    Expr arg = expr();
    if (at(",")) throw ArityError(what + " takes one argument (position " + std::to_string(peek().pos) + ")");
    expect(")");
    return arg;
  }

  /// Cycle notation followed by an argument list: ('(' DIGITS ')')+ '('.
  std::optional<Perm4> try_perm() {
    std::size_t k = 0;
    std::string text;
    while (at("(", k) && peek(k + 1).type == Token::Number && at(")", k + 2)) {
      const std::string& d = peek(k + 1).text;
      if (d.size() < 2 || d.find_first_not_of("0123") != std::string::npos) break;
      text += "(" + d + ")";
      k += 3;
    }
    if (k == 0 || !at("(", k)) return std::nullopt;
    const std::size_t pos = peek().pos;
    try {
      Perm4 p = Perm4::parse(text);
      i_ += k;
      return p;
    } catch (const Error& e) {
      throw ParseError(pos, e.what());
    }
  }

  Expr primary() {
    const Token& t = peek();
    if (t.type == Token::Number) {
      ++i_;
      return Expr::num(Rat(mpz_class(t.text)));
    }
    if (t.type == Token::Ident) {
      if (t.text == "ad" && at("(", 1)) {
        ++i_;
        Expr x = single_argument("ad");
        expect("^");
        long n = integer(false);
        Expr y = single_argument("ad(...)^n");
        return Expr::node(Kind::AdPower, {std::move(x), std::move(y)}, n);
      }
      if (auto g = named_gen(t.text); g && at("(", 1)) {
        std::string name = t.text;
        ++i_;
        return Expr::apply(*g, single_argument(name));
      }
      validate_symbol(t.text, t.pos);
      ++i_;
      return Expr::sym(t.text);
    }
    if (at("[")) {
      ++i_;
      Expr a = expr();
      expect(",");
      Expr b = expr();
      if (at(",")) throw ArityError("bracket takes two arguments (position " + std::to_string(peek().pos) + ")");
      expect("]");
      return Expr::node(Kind::Bracket, {std::move(a), std::move(b)});
    }
    if (at("(")) {
      if (auto p = try_perm()) return Expr::apply(*p, single_argument(p->to_string()));
      ++i_;
      Expr e = expr();
      expect(")");
      return e;
    }
    fail({"number", "symbol", "'('", "'['", "'-'"});
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view input) { return detail::Parser(input).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation.

enum class Context { Loop, Onsager, Extension };

inline const char* context_name(Context c) {
  switch (c) {
    case Context::Loop: return "loop";
    case Context::Onsager: return "onsager";
    case Context::Extension: return "extension";
  }
  return "?";
}

inline std::optional<Context> context_from_name(std::string_view s) {
  if (s == "loop") return Context::Loop;
  if (s == "onsager") return Context::Onsager;
  if (s == "extension") return Context::Extension;
  return std::nullopt;
}

namespace detail {

inline std::optional<std::pair<int, int>> pair_symbol(const std::string& n, char head) {
  if (n.size() == 4 && n[0] == head && n[1] == '_') return std::make_pair(n[2] - '0', n[3] - '0');
  return std::nullopt;
}

[[noreturn]] inline void not_in_context(const std::string& n, Context c) {
  throw ContextError("'" + n + "' is not available in the " + std::string(context_name(c)) + " context");
}

struct LoopPolicy {
  using Elem = LoopElem;
  static constexpr Context context = Context::Loop;

  Elem symbol(const std::string& n) const {
    if (n.size() == 2 && n[0] == 'u') return LoopElem::basis(n[1] - '0');
    if (n.size() == 2 && n[0] == 'v') return embed(OnsagerElem::basis(n[1] - '0'));
    if (n == "x") return xyz_to_u({RingElem(1), RingElem(), RingElem()});
    if (n == "y") return xyz_to_u({RingElem(), RingElem(1), RingElem()});
    if (n == "z") return xyz_to_u({RingElem(), RingElem(), RingElem(1)});
    if (auto ij = pair_symbol(n, 'X')) return psi({ij->first, ij->second});
    not_in_context(n, context);
  }
  Elem scale(const Elem& e, const RingElem& r) const { return e * r; }
  Elem bracket(const Elem& a, const Elem& b) const { return tetra::bracket(a, b); }
  Elem act(const Perm4& p, const Elem& e) const { return apply(p, e); }
};

struct OnsagerPolicy {
  using Elem = OnsagerElem;
  static constexpr Context context = Context::Onsager;
  static constexpr long max_index = 2000;

  mutable ClassicalImages images;

  Elem symbol(const std::string& n) const {
    if (n.size() == 2 && n[0] == 'v') return OnsagerElem::basis(n[1] - '0');
    if (n.size() > 2 && (n[0] == 'A' || n[0] == 'G') && n[1] == '_') {
      const std::string digits = n.substr(2);
      if (digits.size() > 6) throw ContextError("index too large in '" + n + "'");
      long m = std::stol(digits);
      if (m > max_index || m < -max_index) throw ContextError("index too large in '" + n + "'");
      return n[0] == 'A' ? images.A(m) : images.G(m);
    }
    not_in_context(n, context);
  }
  Elem scale(const Elem& e, const RingElem& r) const {
    if (!r.is_polynomial()) throw ContextError("Onsager elements scale only by polynomials in t, got " + r.to_string());
    return e * r.num();
  }
  Elem bracket(const Elem& a, const Elem& b) const { return obracket(a, b); }
  Elem act(const Perm4&, const Elem&) const { throw ContextError("S4 does not act on the onsager context"); }
};

/// The standard lift table, fitted once.
inline const LiftTable& standard_lifts() {
  static const LiftTable l = fit_lifts();
  return l;
}

/// Elements of the extension are written in the chart g + k K0 + k K1:
/// u_i, x, y, z, v_i denote (g, 0), while X_ij, Y_ij, C_ij are the fitted
/// lifts. A non-constant scalar may only multiply an element with zero
/// central part.
struct ExtensionPolicy {
  using Elem = ExtElem;
  static constexpr Context context = Context::Extension;

  Elem symbol(const std::string& n) const {
    const LiftTable& l = standard_lifts();
    if (n == "K0") return ExtElem::central(1, 0);
    if (n == "K1") return ExtElem::central(0, 1);
    if (auto ij = pair_symbol(n, 'X')) return l.X(ij->first, ij->second);
    if (auto ij = pair_symbol(n, 'Y')) return y_generators(l).at(*ij);
    if (auto ij = pair_symbol(n, 'C')) return l.C(ij->first, ij->second).elem();
    return ExtElem{LoopPolicy().symbol(n)};
  }
  Elem scale(const Elem& e, const RingElem& r) const {
    if (r.is_constant()) return e * r.constant_value();
    if (e.c0 != 0 || e.c1 != 0)
      throw ContextError("only elements with zero central part scale by the non-constant " + r.to_string());
    return ExtElem{e.loop * r};
  }
  Elem bracket(const Elem& a, const Elem& b) const { return ext_bracket(a, b); }
  Elem act(const Perm4& p, const Elem& e) const { return s4_ext_apply(p, e, standard_lifts()); }
};

template <class Policy>
class Evaluator {
 public:
  using Elem = typename Policy::Elem;
  using Value = std::variant<RingElem, Elem>;

  Value eval(const Expr& e) const {
    switch (e.kind) {
      case Kind::Number: return RingElem(e.number);
      case Kind::Symbol:
        if (e.name == "t") return RingElem::t();
        if (e.name == "t'") return RingElem::t_prime();
        if (e.name == "t''") return RingElem::t_dprime();
        return policy_.symbol(e.name);
      case Kind::Add:
      case Kind::Sub: {
        Value a = eval(e.args[0]), b = eval(e.args[1]);
        const bool sub = e.kind == Kind::Sub;
        if (auto* ra = std::get_if<RingElem>(&a); ra && std::holds_alternative<RingElem>(b)) {
          const RingElem& rb = std::get<RingElem>(b);
          return sub ? *ra - rb : *ra + rb;
        }
        Elem ea = as_elem(a, "sum"), eb = as_elem(b, "sum");
        return sub ? Elem(ea - eb) : Elem(ea + eb);
      }
      case Kind::Mul: {
        Value a = eval(e.args[0]), b = eval(e.args[1]);
        const RingElem* ra = std::get_if<RingElem>(&a);
        const RingElem* rb = std::get_if<RingElem>(&b);
        if (ra && rb) return *ra * *rb;
        if (rb) return policy_.scale(std::get<Elem>(a), *rb);
        if (ra) return policy_.scale(std::get<Elem>(b), *ra);
        throw ContextError("product of two algebra elements; use [a, b] for the bracket");
      }
      case Kind::Div: {
        Value a = eval(e.args[0]), b = eval(e.args[1]);
        const RingElem* rb = std::get_if<RingElem>(&b);
        if (!rb) throw ContextError("division by an algebra element");
        RingElem inv = invert(*rb);
        if (auto* ra = std::get_if<RingElem>(&a)) return *ra * inv;
        return policy_.scale(std::get<Elem>(a), inv);
      }
      case Kind::Neg: {
        Value a = eval(e.args[0]);
        if (auto* ra = std::get_if<RingElem>(&a)) return -*ra;
        return Elem(-std::get<Elem>(a));
      }
      case Kind::Pow: {
        Value a = eval(e.args[0]);
        auto* ra = std::get_if<RingElem>(&a);
        if (!ra) throw ContextError("powers apply to ring scalars only");
        if (e.exponent < 0) return invert(*ra).pow(static_cast<int>(-e.exponent));
        return ra->pow(static_cast<int>(e.exponent));
      }
      case Kind::Bracket:
        return policy_.bracket(as_elem(eval(e.args[0]), "bracket"), as_elem(eval(e.args[1]), "bracket"));
      case Kind::AdPower: {
        Elem x = as_elem(eval(e.args[0]), "ad");
        Elem y = as_elem(eval(e.args[1]), "ad");
        for (long i = 0; i < e.exponent; ++i) y = policy_.bracket(x, y);
        return y;
      }
      case Kind::Apply: return policy_.act(e.perm, as_elem(eval(e.args[0]), "group action"));
    }
    throw Error("internal: unknown expression kind");
  }

  /// Algebra element value; a zero scalar counts as the zero element.
  Elem eval_elem(const Expr& e) const { return as_elem(eval(e), "algebra element"); }

 private:
  static Elem as_elem(const Value& v, const char* what) {
    if (auto* r = std::get_if<RingElem>(&v)) {
      if (r->is_zero()) return Elem();
      throw ContextError(std::string(what) + " needs an algebra element, got the scalar " + r->to_string());
    }
    return std::get<Elem>(v);
  }
  static RingElem invert(const RingElem& r) {
    auto inv = r.inverse();
    if (!inv) throw ContextError(r.to_string() + " is not a unit");
    return *inv;
  }

  Policy policy_;
};

}  // namespace detail

using LoopEvaluator = detail::Evaluator<detail::LoopPolicy>;
using OnsagerEvaluator = detail::Evaluator<detail::OnsagerPolicy>;
using ExtensionEvaluator = detail::Evaluator<detail::ExtensionPolicy>;

inline LoopElem eval_loop(const Expr& e) { return LoopEvaluator().eval_elem(e); }
inline OnsagerElem eval_onsager(const Expr& e) { return OnsagerEvaluator().eval_elem(e); }
inline ExtElem eval_extension(const Expr& e) { return ExtensionEvaluator().eval_elem(e); }

/// Scalar value of an expression built from numbers and t, t', t''.
inline RingElem eval_ring(const Expr& e) {
  auto v = LoopEvaluator().eval(e);
  if (auto* r = std::get_if<RingElem>(&v)) return *r;
  throw ContextError("expected a ring scalar");
}

inline RingElem parse_ring(std::string_view s) { return eval_ring(parse(s)); }

inline Poly parse_poly(std::string_view s) {
  RingElem r = parse_ring(s);
  if (!r.is_polynomial()) throw ContextError("expected a polynomial in t, got " + r.to_string());
  return r.num();
}

/// One "basis=<b>\tcoeff=<c>" record per basis element of the context, in fixed order.
struct Rendered {
  std::string text;
  std::vector<std::pair<std::string, std::string>> records;
};

namespace detail {
template <class Value>
Rendered render_value(const Value& v, Context c) {
  Rendered out;
  if (auto* r = std::get_if<RingElem>(&v)) {
    out.text = r->to_string();
    out.records.emplace_back("1", r->to_string());
    return out;
  }
  const auto& e = std::get<1>(v);
  out.text = e.to_string();
  if constexpr (std::is_same_v<std::decay_t<decltype(e)>, LoopElem>) {
    for (int i = 0; i < 3; ++i) out.records.emplace_back("u" + std::to_string(i), e.c[static_cast<std::size_t>(i)].to_string());
  } else if constexpr (std::is_same_v<std::decay_t<decltype(e)>, OnsagerElem>) {
    for (int i = 0; i < 3; ++i) out.records.emplace_back("v" + std::to_string(i), e.p[static_cast<std::size_t>(i)].to_string());
  } else {
    for (int i = 0; i < 3; ++i)
      out.records.emplace_back("u" + std::to_string(i), e.loop.c[static_cast<std::size_t>(i)].to_string());
    out.records.emplace_back("K0", tetra::to_string(e.c0));
    out.records.emplace_back("K1", tetra::to_string(e.c1));
  }
  (void)c;
  return out;
}
}  // namespace detail

inline Rendered evaluate(const Expr& e, Context c) {
  switch (c) {
    case Context::Loop: return detail::render_value(LoopEvaluator().eval(e), c);
    case Context::Onsager: return detail::render_value(OnsagerEvaluator().eval(e), c);
    case Context::Extension: return detail::render_value(ExtensionEvaluator().eval(e), c);
  }
  throw Error("internal: unknown context");
}

/// Canonical text of the value of `input` in context c.
inline std::string eval_text(std::string_view input, Context c = Context::Loop) { return evaluate(parse(input), c).text; }

// ---------------------------------------------------------------------------
// Onsager ideal specs as text.

/// Inverse of OnsagerIdealSpec::to_string.
inline OnsagerIdealSpec parse_ideal_spec(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  const auto semi = s.find(';');
  if (semi == std::string_view::npos) throw Error("ideal spec needs 'J=<poly>; typeI ...' or 'J=<poly>; typeII eta=<r>'");
  std::string_view head = trim(s.substr(0, semi));
  std::string_view tail = trim(s.substr(semi + 1));
  if (head.substr(0, 2) != "J=") throw Error("ideal spec must start with J=<poly>");
  Poly q = parse_poly(head.substr(2));
  auto fields = [&](std::string_view rest) {
    std::vector<std::pair<std::string, std::string>> kv;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = trim(rest.substr(0, comma));
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw Error("expected key=value in ideal spec, got '" + std::string(item) + "'");
      kv.emplace_back(std::string(trim(item.substr(0, eq))), std::string(trim(item.substr(eq + 1))));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return kv;
  };
  if (tail.substr(0, 7) == "typeII ") {
    auto kv = fields(tail.substr(7));
    if (kv.size() != 1 || kv[0].first != "eta") throw Error("typeII spec takes exactly eta=<rational>");
    RingElem eta = parse_ring(kv[0].second);
    if (!eta.is_constant()) throw Error("eta must be a rational number");
    return OnsagerIdealSpec::type_ii(q, eta.constant_value());
  }
  if (tail.substr(0, 6) == "typeI ") {
    TypeIFlags f;
    for (auto& [k, v] : fields(tail.substr(6))) {
      if (v != "0" && v != "1") throw Error("flag " + k + " must be 0 or 1");
      bool b = v == "1";
      if (k == "eps") f.eps = b;
      else if (k == "delta") f.delta = b;
      else if (k == "gamma") f.gamma = b;
      else if (k == "eps'") f.eps2 = b;
      else if (k == "delta'") f.delta2 = b;
      else if (k == "gamma'") f.gamma2 = b;
      else throw Error("unknown typeI flag '" + k + "'");
    }
    return OnsagerIdealSpec::type_i(q, f);
  }
  throw Error("ideal spec type must be typeI or typeII");
}

}  // namespace tetra::expr
