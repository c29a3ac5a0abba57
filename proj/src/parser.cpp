#include "gincomplex/parser.hpp"

#include <cctype>
#include <vector>

namespace gincomplex {

namespace {

enum class Tok { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::vector<Token> lex(std::string_view line, int lineNo) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Int, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j == i + 1) throw ParseError("expected a variable index after 'x'", lineNo, col);
      out.push_back({Tok::Var, std::string(line.substr(i + 1, j - i - 1)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", lineNo, col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(std::vector<Token> tokens, const Ring& ring, int lineNo)
      : tokens_(std::move(tokens)), ring_(ring), line_(lineNo) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail("expected an operator before '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, peek().column); }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    if (peek().kind != Tok::Int) fail("expected a non-negative integer exponent");
    const Token& e = next();
    if (e.text.size() > 5 || std::stol(e.text) > kMaxExponent) {
      throw ParseError("exponent " + e.text + " is too large", line_, e.column);
    }
    long exponent = std::stol(e.text);
    Polynomial result = Polynomial::constant(ring_, base.order(), 1);
    while (exponent > 0) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  Polynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        std::uint64_t value = 0;
        for (char c : t.text) value = (value * 10 + static_cast<std::uint64_t>(c - '0')) % ring_.field.prime();
        return Polynomial::constant(ring_, MonomialOrder::grevlex(), static_cast<std::int64_t>(value));
      }
      case Tok::Var: {
        next();
        const long index = t.text.size() > 3 ? 1000 : std::stol(t.text);
        if (index >= ring_.nvars) {
          throw ParseError("variable x" + t.text + " is outside the ring x0..x" + std::to_string(ring_.nvars - 1),
                           line_, t.column);
        }
        return Polynomial::variable(ring_, MonomialOrder::grevlex(), static_cast<int>(index));
      }
      case Tok::LParen: {
        next();
        Polynomial inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of line");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Ring& ring_;
  int line_;
};

Polynomial parseLine(std::string_view line, const Ring& ring, int lineNo) {
  try {
    return ExpressionParser(lex(line, lineNo), ring, lineNo).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), lineNo, 1);
  }
}

bool isBlank(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

IdealFile parseIdealFile(std::string_view text, const FieldConfig& field, bool preferHeaderPrime) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }

  std::optional<Ring> ring;
  std::optional<std::uint32_t> headerPrime;
  std::vector<Polynomial> generators;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int lineNo = static_cast<int>(k) + 1;
    const std::string_view line = lines[k];
    if (isBlank(line)) continue;
    if (!ring) {
      std::vector<Token> tokens;
      std::size_t i = line.find_first_not_of(" \t");
      if (line.substr(i, 4) != "ring") throw ParseError("expected 'ring n [p]' header", lineNo, static_cast<int>(i) + 1);
      tokens = lex(line.substr(i + 4), lineNo);
      for (Token& t : tokens) t.column += static_cast<int>(i) + 4;
      if (tokens[0].kind != Tok::Int) throw ParseError("expected the number of variables", lineNo, tokens[0].column);
      if (tokens[0].text.size() > 2 || std::stoi(tokens[0].text) < 1 || std::stoi(tokens[0].text) > kMaxUserVars) {
        throw ParseError("number of variables must be between 1 and " + std::to_string(kMaxUserVars), lineNo,
                         tokens[0].column);
      }
      const int n = std::stoi(tokens[0].text);
      FieldConfig chosen = field;
      std::size_t next = 1;
      if (tokens[1].kind == Tok::Int) {
        const Token& pt = tokens[1];
        if (pt.text.size() > 10 || !isPrime(std::stoull(pt.text)) || std::stoull(pt.text) >= (1ull << 31)) {
          throw ParseError("'" + pt.text + "' is not a prime below 2^31", lineNo, pt.column);
        }
        headerPrime = static_cast<std::uint32_t>(std::stoull(pt.text));
        if (preferHeaderPrime) chosen = FieldConfig(*headerPrime);
        next = 2;
      }
      if (tokens[next].kind != Tok::End) throw ParseError("unexpected '" + tokens[next].text + "'", lineNo, tokens[next].column);
      ring = Ring{n, chosen};
      continue;
    }
    Polynomial f = parseLine(line, *ring, lineNo);
    const int col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (f.isZero()) throw ParseError("polynomial on line " + std::to_string(lineNo) + " is zero", lineNo, col);
    if (!f.isHomogeneous()) {
      throw ParseError("polynomial on line " + std::to_string(lineNo) + " is not homogeneous", lineNo, col);
    }
    generators.push_back(std::move(f));
  }
  if (!ring) throw ParseError("missing 'ring n [p]' header", 1, 1);
  if (generators.empty()) {
    throw ParseError("no generators after the ring header", static_cast<int>(lines.size()), 1);
  }
  return IdealFile{Ideal(*ring, std::move(generators)), headerPrime};
}

Polynomial parsePolynomial(std::string_view text, const Ring& ring) { return parseLine(text, ring, 1); }

Monomial parseMonomial(std::string_view text, int nvars, int firstIndex) {
  std::vector<int> exps(nvars, 0);
  if (text == "1") return Monomial(nvars, exps);
  std::size_t i = 0;
  auto readInt = [&](std::size_t& pos) {
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw ParseError("expected digits in monomial '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
    return std::stoi(std::string(text.substr(begin, pos - begin)));
  };
  while (i < text.size()) {
    if (text[i] != 'x') throw ParseError("expected 'x' in monomial '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
    ++i;
    const int var = readInt(i) - firstIndex;
    if (var < 0 || var >= nvars) throw ParseError("variable out of range in '" + std::string(text) + "'", 1, static_cast<int>(i));
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = readInt(i);
    }
    exps[var] += e;
    if (i < text.size()) {
      if (text[i] != '*') throw ParseError("expected '*' in monomial '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
      ++i;
    }
  }
  return Monomial(nvars, exps);
}

std::string formatIdealFile(const Ideal& ideal) {
  std::string out = "ring " + std::to_string(ideal.nvars()) + " " + std::to_string(ideal.field().prime()) + "\n";
  for (const Polynomial& g : ideal.generators()) out += g.toString() + "\n";
  return out;
}

}  // namespace gincomplex
