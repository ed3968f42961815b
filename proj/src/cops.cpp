#include "gtrs/cops.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace gtrs {

namespace {

constexpr std::string_view app_glyph = "∘";

struct Token {
  enum class Kind { open, close, comma, arrow, app, ident, end };
  Kind kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t{Token::Kind::end, {}, line_, column_};
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (c == '(') return single(t, Token::Kind::open);
    if (c == ')') return single(t, Token::Kind::close);
    if (c == ',') return single(t, Token::Kind::comma);
    if (src_.substr(pos_).starts_with("->")) {
      advance(2);
      t.kind = Token::Kind::arrow;
      return t;
    }
    if (src_.substr(pos_).starts_with(app_glyph)) {
      advance(app_glyph.size());
      t.kind = Token::Kind::app;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && !ends_ident()) advance(1);
    t.kind = Token::Kind::ident;
    t.text = std::string(src_.substr(start, pos_ - start));
    return t;
  }

  Token peek() {
    Lexer copy = *this;
    return copy.next();
  }

  /// Skips text up to the parenthesis closing the current block, consuming it.
  /// Returns the skipped text.
  std::string skip_balanced(std::size_t open_line, std::size_t open_column) {
    std::size_t depth = 1, start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) {
        std::string text(src_.substr(start, pos_ - start));
        advance(1);
        return text;
      }
      advance(1);
    }
    throw ParseError(open_line, open_column, "unterminated block");
  }

private:
  bool ends_ident() const {
    char c = src_[pos_];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',') return true;
    auto rest = src_.substr(pos_);
    return rest.starts_with("->") || rest.starts_with(app_glyph);
  }
  Token single(Token t, Token::Kind k) {
    advance(1);
    t.kind = k;
    return t;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance(1);
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

struct RawTerm {
  std::string name;
  std::size_t line, column;
  std::vector<RawTerm> args;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
  throw ParseError(t.line, t.column, what);
}

std::string describe(const Token& t) {
  switch (t.kind) {
  case Token::Kind::open: return "'('";
  case Token::Kind::close: return "')'";
  case Token::Kind::comma: return "','";
  case Token::Kind::arrow: return "'->'";
  case Token::Kind::app: return "'∘'";
  case Token::Kind::ident: return "'" + t.text + "'";
  case Token::Kind::end: return "end of input";
  }
  return "?";
}

Token expect(Lexer& lex, Token::Kind k, const char* what) {
  Token t = lex.next();
  if (t.kind != k) fail(t, std::string("expected ") + what + ", found " + describe(t));
  return t;
}

RawTerm parse_raw(Lexer& lex) {
  Token head = expect(lex, Token::Kind::ident, "a symbol");
  RawTerm t{head.text, head.line, head.column, {}};
  if (lex.peek().kind != Token::Kind::open) return t;
  lex.next();
  for (;;) {
    t.args.push_back(parse_raw(lex));
    Token sep = lex.next();
    if (sep.kind == Token::Kind::close) break;
    if (sep.kind != Token::Kind::comma) fail(sep, "expected ',' or ')', found " + describe(sep));
  }
  return t;
}

TermId build(const RawTerm& raw, TermStore& store) {
  std::vector<TermId> args;
  args.reserve(raw.args.size());
  for (const RawTerm& a : raw.args) args.push_back(build(a, store));
  SymbolId f;
  try {
    f = store.symbol(raw.name, static_cast<unsigned>(raw.args.size()));
  } catch (const StructuralError& e) {
    throw ParseError(raw.line, raw.column, e.what());
  }
  return store.make(f, args);
}

const RawTerm* find_variable(const RawTerm& t, const std::unordered_set<std::string>& vars) {
  if (vars.count(t.name)) return &t;
  for (const RawTerm& a : t.args) {
    if (const RawTerm* v = find_variable(a, vars)) return v;
  }
  return nullptr;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
  Lexer lex(text);
  std::unordered_set<std::string> vars;
  std::vector<std::pair<RawTerm, RawTerm>> rules;
  std::optional<std::string> comment;

  for (Token open = lex.next(); open.kind != Token::Kind::end; open = lex.next()) {
    if (open.kind != Token::Kind::open) fail(open, "expected '(', found " + describe(open));
    Token kw = expect(lex, Token::Kind::ident, "a block name");
    if (kw.text == "VAR") {
      for (Token t = lex.next(); t.kind != Token::Kind::close; t = lex.next()) {
        if (t.kind != Token::Kind::ident) fail(t, "expected a variable, found " + describe(t));
        vars.insert(t.text);
      }
    } else if (kw.text == "RULES") {
      while (lex.peek().kind != Token::Kind::close) {
        RawTerm lhs = parse_raw(lex);
        expect(lex, Token::Kind::arrow, "'->'");
        RawTerm rhs = parse_raw(lex);
        rules.emplace_back(std::move(lhs), std::move(rhs));
        if (lex.peek().kind == Token::Kind::comma) lex.next();
      }
      lex.next();
    } else if (kw.text == "COMMENT") {
      std::string body = lex.skip_balanced(open.line, open.column);
      auto first = body.find_first_not_of(" \t\r\n");
      auto last = body.find_last_not_of(" \t\r\n");
      comment = first == std::string::npos ? "" : body.substr(first, last - first + 1);
    } else {
      fail(kw, "unsupported block '" + kw.text + "'");
    }
  }

  ProblemFile out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (const RawTerm* side : {&rules[i].first, &rules[i].second}) {
      if (const RawTerm* v = find_variable(*side, vars)) {
        throw ParseError(v->line, v->column,
                         "variable " + v->name + " in rule " + std::to_string(i + 1));
      }
    }
    TermId lhs = build(rules[i].first, out.trs.store);
    TermId rhs = build(rules[i].second, out.trs.store);
    out.trs.rules.push_back({lhs, rhs});
  }
  out.comment = std::move(comment);
  return out;
}

ProblemFile read_problem(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw IoError("cannot read " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string print_problem(const Trs& trs, const std::optional<std::string>& comment) {
  std::string out;
  if (comment) out += "(COMMENT\n" + *comment + "\n)\n";
  out += "(RULES\n";
  for (const Rule& r : trs.rules) {
    out += "  " + to_string(trs.store, r.lhs) + " -> " + to_string(trs.store, r.rhs) + "\n";
  }
  out += ")\n";
  return out;
}

namespace {

// expr := app_term ("∘" app_term)* ; app_term := "(" expr ")" | ident ["(" expr ("," expr)* ")"]
class CurriedParser {
public:
  CurriedParser(std::string_view text, CurriedTrs& ctrs) : lex_(text), ctrs_(ctrs) {}

  TermId parse() {
    TermId t = expr();
    Token end = lex_.next();
    if (end.kind != Token::Kind::end) fail(end, "unexpected " + describe(end));
    return t;
  }

private:
  TermId expr() {
    TermId t = atom();
    while (lex_.peek().kind == Token::Kind::app) {
      lex_.next();
      t = ctrs_.trs.store.make(ctrs_.app, {t, atom()});
    }
    return t;
  }

  TermId atom() {
    Token t = lex_.next();
    if (t.kind == Token::Kind::open) {
      TermId inner = expr();
      expect(lex_, Token::Kind::close, "')'");
      return inner;
    }
    if (t.kind != Token::Kind::ident) fail(t, "expected a term, found " + describe(t));
    if (t.text == app_symbol_name) fail(t, "reserved symbol");
    TermStore& store = ctrs_.trs.store;
    TermId head;
    try {
      head = store.make(store.symbol(t.text, 0), {});
    } catch (const StructuralError& e) {
      throw ParseError(t.line, t.column, e.what());
    }
    if (lex_.peek().kind != Token::Kind::open) return head;
    lex_.next();
    for (;;) {
      head = store.make(ctrs_.app, {head, expr()});
      Token sep = lex_.next();
      if (sep.kind == Token::Kind::close) break;
      if (sep.kind != Token::Kind::comma) fail(sep, "expected ',' or ')', found " + describe(sep));
    }
    return head;
  }

  Lexer lex_;
  CurriedTrs& ctrs_;
};

} // namespace

TermId parse_curried_term(std::string_view text, CurriedTrs& ctrs) {
  return CurriedParser(text, ctrs).parse();
}

} // namespace gtrs
