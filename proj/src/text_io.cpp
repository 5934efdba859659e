#include "lefkit/text_io.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace lefkit {

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::string format_monomial(const Monomial& m, const RingContext& ring) {
  if (m.nvars() != ring.nvars()) {
    throw DimensionError("monomial dimension does not match ring");
  }
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var_name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingContext& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    bool neg = t.coeff < 0;
    mpq_class a = neg ? mpq_class(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += format_rational(a);
    } else if (a == 1) {
      out += format_monomial(t.mono, ring);
    } else {
      out += format_rational(a) + "*" + format_monomial(t.mono, ring);
    }
    first = false;
  }
  return out;
}

namespace {

struct Token {
  enum Kind { kNumber, kName, kPlus, kMinus, kStar, kCaret, kSlash, kEnd };
  Kind kind;
  std::string text;
  int line;
  int col;
};

struct Lexer {
  explicit Lexer(const std::string& src, int base_line = 1)
      : src_(src), line_(base_line) {}

  Token next() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        advance();
        ++line_;
        col_ = 1;
      } else {
        break;
      }
    }
    if (pos_ >= src_.size()) return {Token::kEnd, "", line_, col_};
    int line = line_, col = col_;
    char c = src_[pos_];
    switch (c) {
      case '+': advance(); return {Token::kPlus, "+", line, col};
      case '-': advance(); return {Token::kMinus, "-", line, col};
      case '*': advance(); return {Token::kStar, "*", line, col};
      case '^': advance(); return {Token::kCaret, "^", line, col};
      case '/': advance(); return {Token::kSlash, "/", line, col};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        text += src_[pos_];
        advance();
      }
      return {Token::kNumber, text, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      return {Token::kName, text, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    ++pos_;
    ++col_;
  }
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class PolynomialParser {
 public:
  PolynomialParser(const std::string& src, RingPtr ring, int base_line)
      : lexer_(src, base_line), ring_(std::move(ring)) {
    cur_ = lexer_.next();
  }

  Polynomial parse() {
    Polynomial p = polynomial();
    expect_end();
    return p;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.col);
  }

  void expect_end() {
    if (cur_.kind != Token::kEnd) fail("unexpected trailing input '" + cur_.text + "'");
  }

  Polynomial polynomial() {
    std::vector<Term> terms;
    int sign = 1;
    if (cur_.kind == Token::kPlus || cur_.kind == Token::kMinus) {
      sign = cur_.kind == Token::kMinus ? -1 : 1;
      advance();
    }
    while (true) {
      term(sign, terms);
      if (cur_.kind == Token::kPlus || cur_.kind == Token::kMinus) {
        sign = cur_.kind == Token::kMinus ? -1 : 1;
        advance();
        continue;
      }
      break;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  void term(int sign, std::vector<Term>& out) {
    mpq_class coeff = sign;
    Monomial mono = Monomial::one(ring_->nvars());
    while (true) {
      if (cur_.kind == Token::kNumber) {
        coeff *= rational();
      } else if (cur_.kind == Token::kName) {
        auto idx = ring_->var_index(cur_.text);
        if (!idx) fail("unknown variable '" + cur_.text + "'");
        advance();
        int e = 1;
        if (cur_.kind == Token::kCaret) {
          advance();
          if (cur_.kind != Token::kNumber) fail("expected an exponent");
          e = natural(9999, "exponent");
        }
        if (e > 0) mono = mono * power(*idx, e);
      } else {
        fail("expected a coefficient or a variable");
      }
      if (cur_.kind == Token::kStar) {
        advance();
        continue;
      }
      break;
    }
    out.push_back({std::move(mono), std::move(coeff)});
  }

  mpq_class rational() {
    mpz_class num(cur_.text);
    advance();
    if (cur_.kind != Token::kSlash) return mpq_class(num);
    advance();
    if (cur_.kind != Token::kNumber) fail("expected a denominator");
    mpz_class den(cur_.text);
    if (den == 0) fail("zero denominator");
    advance();
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  int natural(int limit, const std::string& what) {
    if (cur_.text.size() > 9) fail(what + " too large");
    int v = std::stoi(cur_.text);
    if (v > limit) fail(what + " too large");
    advance();
    return v;
  }

  Monomial power(int var, int e) const {
    Monomial m = Monomial::one(ring_->nvars());
    return m.with_exp(var, e);
  }

  Lexer lexer_;
  RingPtr ring_;
  Token cur_;
};

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolynomialParser(text, ring, 1).parse();
}

Polynomial parse_polynomial_line(const std::string& text, const RingPtr& ring,
                                 int line) {
  return PolynomialParser(text, ring, line).parse();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      std::string piece = line.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      bool only_space = piece.find_first_not_of(" \t\r") == std::string::npos;
      if (only_space) {
        // A trailing comma at end of line is continuation style, not an
        // empty generator.
        if (comma == std::string::npos && start > 0) break;
        int col = static_cast<int>(start) + 1;
        throw ParseError("empty generator", lineno, col);
      }
      // Re-parse with the piece's own offset so errors point into the line.
      std::string padded(start, ' ');
      padded += piece;
      out.push_back(PolynomialParser(padded, ring, lineno).parse());
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

Monomial parse_monomial(const std::string& text, const RingPtr& ring) {
  Polynomial p = parse_polynomial(text, ring);
  if (p.is_zero()) throw ParseError("expected a monomial, got 0", 1, 1);
  if (p.num_terms() != 1) throw ParseError("expected a single monomial", 1, 1);
  return p.terms().front().mono;
}

std::vector<Monomial> parse_monomial_list(const std::string& text,
                                          const RingPtr& ring) {
  std::vector<Monomial> out;
  for (const Polynomial& p : parse_polynomial_list(text, ring)) {
    if (p.num_terms() != 1) {
      throw ParseError("expected a list of monomials", 1, 1);
    }
    out.push_back(p.terms().front().mono);
  }
  return out;
}

RingPtr parse_vars(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&](std::size_t end_pos) {
    std::size_t a = cur.find_first_not_of(" \t\r");
    std::size_t b = cur.find_last_not_of(" \t\r");
    if (a == std::string::npos) {
      throw ParseError("empty variable name", 1, end_pos - cur.size() + 1);
    }
    names.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (std::size_t i = 0; i < csv.size(); ++i) {
    if (csv[i] == ',') {
      flush(i);
    } else {
      cur += csv[i];
    }
  }
  flush(csv.size());
  return RingContext::create(std::move(names));
}

}  // namespace lefkit
