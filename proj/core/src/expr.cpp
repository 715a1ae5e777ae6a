#include "ortholog/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ortholog/error.hpp"

namespace ortholog {

namespace {

constexpr std::array<std::string_view, 7> kKeywords{"star", "closure", "join", "meet", "coproduct", "top", "bottom"};

bool is_keyword(std::string_view s) { return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end(); }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

struct Token {
  enum class Type { Ident, Quoted, Punct, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= src_.size()) return tok;
    const char c = src_[pos_];
    if (ident_char(c)) {
      tok.type = Token::Type::Ident;
      while (pos_ < src_.size() && ident_char(src_[pos_])) tok.text += advance();
      return tok;
    }
    if (c == '"') {
      tok.type = Token::Type::Quoted;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') tok.text += advance();
      if (pos_ >= src_.size() || src_[pos_] != '"') throw SyntaxError(line_, col_, "closing '\"'");
      advance();
      return tok;
    }
    if (std::string_view("(){},|&").find(c) != std::string_view::npos) {
      tok.type = Token::Type::Punct;
      tok.text = std::string(1, advance());
      return tok;
    }
    throw SyntaxError(line_, col_, "expression");
  }

 private:
  // UTF-8 continuation bytes do not advance the column.
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0U) != 0x80U) {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  Expr parse() {
    Expr e = expr();
    if (tok_.type != Token::Type::End) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(tok_.line, tok_.col, expected); }

  bool at(std::string_view punct) const { return tok_.type == Token::Type::Punct && tok_.text == punct; }

  void expect(std::string_view punct) {
    if (!at(punct)) fail("'" + std::string(punct) + "'");
    tok_ = lex_.next();
  }

  Expr node(Expr::Kind kind, const Token& at_tok) const {
    Expr e;
    e.kind = kind;
    e.line = at_tok.line;
    e.col = at_tok.col;
    return e;
  }

  Expr infix(Expr::Kind kind, Expr lhs, Expr rhs, const Token& op) const {
    Expr e = node(kind, op);
    e.infix = true;
    e.line = lhs.line;
    e.col = lhs.col;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  // expr := term { '|' term }
  Expr expr() {
    Expr lhs = term();
    while (at("|")) {
      const Token op = tok_;
      tok_ = lex_.next();
      lhs = infix(Expr::Kind::Join, std::move(lhs), term(), op);
    }
    return lhs;
  }

  // term := primary { '&' primary }
  Expr term() {
    Expr lhs = primary();
    while (at("&")) {
      const Token op = tok_;
      tok_ = lex_.next();
      lhs = infix(Expr::Kind::Meet, std::move(lhs), primary(), op);
    }
    return lhs;
  }

  std::string label() {
    if (tok_.type == Token::Type::Quoted || (tok_.type == Token::Type::Ident && !is_keyword(tok_.text))) {
      std::string s = tok_.text;
      tok_ = lex_.next();
      return s;
    }
    fail("label");
  }

  Expr primary() {
    const Token start = tok_;
    if (at("(")) {
      tok_ = lex_.next();
      Expr inner = expr();
      if (at(",")) {
        // A tuple: the first component was parsed as a bare label.
        if (inner.kind != Expr::Kind::Label) fail("')'");
        Expr t = node(Expr::Kind::Tuple, start);
        t.labels = std::move(inner.labels);
        while (at(",")) {
          tok_ = lex_.next();
          t.labels.push_back(label());
        }
        expect(")");
        return t;
      }
      expect(")");
      if (inner.kind == Expr::Kind::Label) {
        Expr t = node(Expr::Kind::Tuple, start);
        t.labels = std::move(inner.labels);
        return t;
      }
      return inner;
    }
    if (tok_.type == Token::Type::Quoted) {
      Expr e = node(Expr::Kind::Label, start);
      e.labels.push_back(label());
      return e;
    }
    if (tok_.type != Token::Type::Ident) fail("expression");
    const std::string word = tok_.text;
    if (word == "top" || word == "bottom") {
      tok_ = lex_.next();
      return node(word == "top" ? Expr::Kind::Top : Expr::Kind::Bottom, start);
    }
    if (word == "star" || word == "closure") {
      tok_ = lex_.next();
      Expr e = node(word == "star" ? Expr::Kind::Star : Expr::Kind::Closure, start);
      expect("(");
      e.children.push_back(expr());
      expect(")");
      return e;
    }
    if (word == "join" || word == "meet" || word == "coproduct") {
      tok_ = lex_.next();
      const auto kind = word == "join" ? Expr::Kind::Join : word == "meet" ? Expr::Kind::Meet : Expr::Kind::Coproduct;
      Expr e = node(kind, start);
      expect("{");
      if (!at("}")) {
        e.children.push_back(expr());
        while (at(",")) {
          tok_ = lex_.next();
          e.children.push_back(expr());
        }
      }
      expect("}");
      return e;
    }
    Expr e = node(Expr::Kind::Label, start);
    e.labels.push_back(label());
    return e;
  }

  Lexer lex_;
  Token tok_;
};

std::string print_label(const std::string& s) {
  const bool plain = !s.empty() && !is_keyword(s) && std::all_of(s.begin(), s.end(), ident_char);
  return plain ? s : "\"" + s + "\"";
}

int precedence(const Expr& e) {
  if (!e.infix) return 3;
  return e.kind == Expr::Kind::Join ? 1 : 2;
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, int parent_prec, bool right, std::string& out) {
  const int p = precedence(child);
  const bool wrap = p < parent_prec || (right && p == parent_prec);
  if (wrap) out += '(';
  print(child, out);
  if (wrap) out += ')';
}

void print(const Expr& e, std::string& out) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Tuple:
      out += '(';
      for (std::size_t i = 0; i < e.labels.size(); ++i) {
        if (i != 0) out += ',';
        out += print_label(e.labels[i]);
      }
      out += ')';
      return;
    case K::Label: out += print_label(e.labels.front()); return;
    case K::Top: out += "top"; return;
    case K::Bottom: out += "bottom"; return;
    case K::Star:
    case K::Closure:
      out += e.kind == K::Star ? "star(" : "closure(";
      print(e.children.front(), out);
      out += ')';
      return;
    case K::Join:
    case K::Meet:
    case K::Coproduct:
      if (e.infix) {
        const int p = precedence(e);
        print_child(e.children[0], p, false, out);
        out += e.kind == K::Join ? " | " : " & ";
        print_child(e.children[1], p, true, out);
        return;
      }
      out += e.kind == K::Join ? "join{" : e.kind == K::Meet ? "meet{" : "coproduct{";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i != 0) out += ", ";
        print(e.children[i], out);
      }
      out += '}';
      return;
  }
}

std::string where(const Expr& e) { return "line " + std::to_string(e.line) + ", col " + std::to_string(e.col) + ": "; }

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

DownSet eval_expr(const Expr& e, const UniversalLogic& u) {
  using K = Expr::Kind;
  const auto& eng = u.engine();
  const auto& p = u.poset();
  auto all = [&] {
    std::vector<DownSet> xs;
    for (const auto& c : e.children) xs.push_back(eval_expr(c, u));
    return xs;
  };
  switch (e.kind) {
    case K::Tuple:
    case K::Label: {
      if (e.labels.size() != static_cast<std::size_t>(p.kappa())) {
        throw Error(ErrorKind::UnknownLabel, where(e) + "tuple has " + std::to_string(e.labels.size()) +
                                                 " components but the logic has kappa " + std::to_string(p.kappa()));
      }
      std::vector<Elem> comps;
      for (int alpha = 0; alpha < p.kappa(); ++alpha) {
        const auto& label = e.labels[static_cast<std::size_t>(alpha)];
        auto x = p.factor(alpha).find(label);
        if (!x) throw Error(ErrorKind::UnknownLabel, where(e) + "\"" + label + "\" is not an element of " + p.factor(alpha).name());
        comps.push_back(*x);
      }
      return eng.principal(p.make(comps));
    }
    case K::Top: return eng.top();
    case K::Bottom: return eng.bottom();
    case K::Star: return eng.star(eval_expr(e.children.front(), u));
    case K::Closure: return eng.closure(eval_expr(e.children.front(), u));
    case K::Join: return eng.djoin(all());
    case K::Meet: return eng.dmeet(all());
    case K::Coproduct: {
      const auto xs = all();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!u.find(xs[i])) {
          throw Error(ErrorKind::NotInCarrier,
                      where(e.children[i]) + "coproduct operand " + u.describe(xs[i]) + " is not **-closed");
        }
      }
      return u.coproduct(xs);
    }
  }
  return eng.bottom();
}

}  // namespace ortholog
