#include "branecalc/parser.hpp"

#include <cctype>
#include <sstream>

namespace branecalc {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw input_error("line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + msg);
}

struct Token {
  enum Kind { Num, Ident, Sym, End } kind = End;
  Rational num;
  std::string text;
  char sym = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  Lexer(std::string_view text, int line, int col_offset = 0)
      : text_(text), line_(line), col_offset_(col_offset) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = static_cast<int>(pos_) + 1 + col_offset_;
    if (pos_ >= text_.size() || text_[pos_] == '#') {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Num;
      tok_.num = read_int();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail(line_, static_cast<int>(pos_) + 1 + col_offset_,
               "expected denominator digits");
        Rational q = read_int();
        if (q == 0) fail(tok_.line, tok_.col, "zero denominator");
        tok_.num /= q;
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\''))
        tok_.text += text_[pos_++];
      return;
    }
    if (std::string("+-*^()=").find(c) != std::string::npos) {
      tok_.kind = Token::Sym;
      tok_.sym = c;
      ++pos_;
      return;
    }
    fail(line_, tok_.col, std::string("unexpected character '") + c + "'");
  }

  Rational read_int() {
    Rational v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col_offset_ = 0;
  Token tok_;
};

class ExprParser {
public:
  ExprParser(Lexer& lex, const AlgebraPtr& alg) : lex_(lex), alg_(alg) {}

  Element parse() {
    Element e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) fail(t.line, t.col, "unexpected trailing input");
    return e;
  }

private:
  Element expr() {
    Element e = term();
    while (lex_.peek().kind == Token::Sym &&
           (lex_.peek().sym == '+' || lex_.peek().sym == '-')) {
      char op = lex_.take().sym;
      Element t = term();
      e = op == '+' ? e + t : e - t;
    }
    return e;
  }

  Element term() {
    int sign = 1;
    while (lex_.peek().kind == Token::Sym &&
           (lex_.peek().sym == '+' || lex_.peek().sym == '-')) {
      if (lex_.take().sym == '-') sign = -sign;
    }
    Element e = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Sym && t.sym == '*') {
        lex_.take();
        e = e * factor();
      } else if (t.kind == Token::Num || t.kind == Token::Ident ||
                 (t.kind == Token::Sym && t.sym == '(')) {
        e = e * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return sign == 1 ? e : -e;
  }

  Element factor() {
    Element e = primary();
    if (lex_.peek().kind == Token::Sym && lex_.peek().sym == '^') {
      lex_.take();
      Token t = lex_.take();
      if (t.kind != Token::Num || denominator(t.num) != 1 || t.num < 0)
        fail(t.line, t.col, "exponent must be a non-negative integer");
      e = e.pow(static_cast<int>(numerator(t.num)));
    }
    return e;
  }

  Element primary() {
    Token t = lex_.take();
    if (t.kind == Token::Num) return Element::unit(alg_) * t.num;
    if (t.kind == Token::Ident) {
      if (alg_->find(t.text) < 0) fail(t.line, t.col, "unknown generator '" + t.text + "'");
      return Element::generator(alg_, t.text);
    }
    if (t.kind == Token::Sym && t.sym == '(') {
      Element e = expr();
      Token close = lex_.take();
      if (close.kind != Token::Sym || close.sym != ')')
        fail(close.line, close.col, "expected ')'");
      return e;
    }
    fail(t.line, t.col, "expected a number, generator, or '('");
  }

  Lexer& lex_;
  const AlgebraPtr& alg_;
};

}  // namespace

ParsedModel parse_model(const std::string& text) {
  std::vector<Generator> gens;
  struct DiffLine {
    std::string name;
    std::string expr;
    int line, col, name_col;
  };
  std::vector<DiffLine> diffs;
  std::string name = "model";

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Lexer lex(line, lineno);
    if (lex.peek().kind == Token::End) continue;
    Token head = lex.take();
    if (head.kind != Token::Ident)
      fail(head.line, head.col, "expected 'generator', 'd', or 'model'");
    if (head.text == "generator") {
      Token n = lex.take();
      if (n.kind != Token::Ident) fail(n.line, n.col, "expected generator name");
      Token deg = lex.take();
      if (deg.kind != Token::Num || denominator(deg.num) != 1)
        fail(deg.line, deg.col, "expected integer degree");
      if (deg.num < 1) fail(deg.line, deg.col, "generator degree must be >= 1");
      for (const Generator& g : gens)
        if (g.name == n.text) fail(n.line, n.col, "duplicate generator '" + n.text + "'");
      gens.push_back(Generator{n.text, static_cast<int>(numerator(deg.num)), 0, ""});
      if (lex.peek().kind != Token::End)
        fail(lex.peek().line, lex.peek().col, "unexpected trailing input");
    } else if (head.text == "d") {
      Token n = lex.take();
      if (n.kind != Token::Ident) fail(n.line, n.col, "expected generator name after 'd'");
      Token eq = lex.take();
      if (eq.kind != Token::Sym || eq.sym != '=') fail(eq.line, eq.col, "expected '='");
      diffs.push_back({n.text, line.substr(eq.col), lineno, eq.col + 1, n.col});
    } else if (head.text == "model") {
      Token n = lex.take();
      if (n.kind != Token::Ident) fail(n.line, n.col, "expected model name");
      name = n.text;
      if (lex.peek().kind != Token::End)
        fail(lex.peek().line, lex.peek().col, "unexpected trailing input");
    } else {
      fail(head.line, head.col, "unknown directive '" + head.text + "'");
    }
  }
  if (gens.empty()) throw input_error("model file declares no generators");

  AlgebraPtr alg = FreeGCA::make(std::move(gens));
  Derivation d(alg, 1);
  for (std::size_t i = 0; i < alg->size(); ++i) d.set_image(i, Element::zero(alg));
  for (const DiffLine& dl : diffs) {
    if (alg->find(dl.name) < 0)
      fail(dl.line, dl.name_col, "unknown generator '" + dl.name + "'");
    Lexer lex(dl.expr, dl.line, dl.col - 1);
    Element value = ExprParser(lex, alg).parse();
    try {
      d.set_image(dl.name, std::move(value));
    } catch (const input_error& e) {
      fail(dl.line, dl.col, std::string("invalid differential for '") + dl.name +
                                "': " + e.what());
    }
  }
  SullivanModel model{alg, std::move(d)};
  if (auto w = model.d_squared_witness())
    throw input_error("d^2 != 0 on generator '" + *w + "'");
  return {std::move(name), std::move(model)};
}

Element parse_element(const std::string& text, const AlgebraPtr& alg) {
  Lexer lex(text, 1);
  if (lex.peek().kind == Token::End) return Element::zero(alg);
  return ExprParser(lex, alg).parse();
}

}  // namespace branecalc
