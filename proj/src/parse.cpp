#include "eulersym/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace eulersym {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

HomogeneityError::HomogeneityError(unsigned high, unsigned low)
    : std::invalid_argument("polynomial is not homogeneous: terms of degree " + std::to_string(high) + " and " +
                            std::to_string(low)),
      high_(high),
      low_(low) {}

void require_homogeneous(const Polynomial& p) {
  auto range = p.degree_range();
  if (range && range->first != range->second) throw HomogeneityError(range->second, range->first);
}

namespace {

enum class Tok { number, ident, op, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Tok::op, std::string(1, c), l, cc});
      advance(1);
    } else {
      throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

std::optional<std::size_t> numbered_variable(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
  if (!std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  if (name.size() > 7) return std::nullopt;
  return std::stoul(name.substr(1)) - 1;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::map<std::string, std::size_t> index, std::size_t num_vars)
      : toks_(std::move(tokens)), index_(std::move(index)), m_(num_vars) {}

  Polynomial run() {
    Polynomial p = expr();
    if (peek().kind != Tok::end) fail(peek(), "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(const char* op) {
    if (peek().kind == Tok::op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }

  static std::optional<Rational> constant_value(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    if (p.size() == 1 && p.terms().begin()->first.degree() == 0) return p.terms().begin()->second;
    return std::nullopt;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept("*")) {
        acc = acc * factor();
      } else if (peek().kind == Tok::op && peek().text == "/") {
        const Token& slash = take();
        const Token& at = peek();
        auto d = constant_value(factor());
        if (!d) fail(at, "division by a non-constant expression");
        if (*d == 0) fail(slash, "division by zero");
        acc *= Rational(1) / *d;
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (accept("-")) return -factor();
    if (accept("+")) return factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind == Tok::op && peek().text == "^") {
      take();
      const Token& at = peek();
      auto e = constant_value(factor());
      if (!e || e->get_den() != 1 || *e < 0) fail(at, "exponent must be a nonnegative integer constant");
      if (*e > 1000) fail(at, "exponent too large");
      return base.pow(static_cast<unsigned>(e->get_num().get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::number:
        return Polynomial::constant(m_, Rational(Integer(t.text)));
      case Tok::ident: {
        auto it = index_.find(t.text);
        if (it == index_.end()) fail(t, "unknown variable '" + t.text + "'");
        return Polynomial::variable(m_, it->second);
      }
      case Tok::op:
        if (t.text == "(") {
          Polynomial inner = expr();
          if (!accept(")")) fail(peek(), "expected ')'");
          return inner;
        }
        fail(t, "unexpected '" + t.text + "'");
      case Tok::end:
        fail(t, "unexpected end of input");
    }
    fail(t, "unexpected token");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
  std::size_t m_;
};

ParsedPolynomial finish(std::vector<Token> tokens, std::map<std::string, std::size_t> index,
                        std::vector<std::string> names) {
  Parser parser(std::move(tokens), std::move(index), names.size());
  Polynomial p = parser.run();
  if (p.is_zero()) throw ParseError(1, 1, "polynomial is zero");
  return {std::move(p), std::move(names)};
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) {
  auto tokens = tokenize(text);
  std::set<std::string> others;
  std::size_t numbered = 0;
  for (const auto& t : tokens) {
    if (t.kind != Tok::ident) continue;
    if (auto k = numbered_variable(t.text)) {
      numbered = std::max(numbered, *k + 1);
    } else {
      others.insert(t.text);
    }
  }
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < numbered; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    index[names.back()] = i;
  }
  for (const auto& o : others) {
    index[o] = names.size();
    names.push_back(o);
  }
  return finish(std::move(tokens), std::move(index), std::move(names));
}

ParsedPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second) throw std::invalid_argument("parse_polynomial: duplicate name " + names[i]);
  return finish(tokenize(text), std::move(index), names);
}

}  // namespace eulersym
