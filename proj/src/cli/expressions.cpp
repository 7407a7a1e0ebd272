#include "measlat/cli/expressions.hpp"

#include <cctype>
#include <cstdint>

namespace measlat::cli {

SourcePos position_of(std::string_view text, std::size_t offset) {
  SourcePos pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string render_diagnostic(std::string_view what, std::string_view text, std::size_t offset,
                              std::string_view message) {
  const SourcePos pos = position_of(text, offset);
  std::string out = "error: " + std::string(what) + " " + std::to_string(pos.line) + ":" +
                    std::to_string(pos.column) + ": " + std::string(message) + "\n";
  std::size_t begin = offset > text.size() ? text.size() : offset;
  while (begin > 0 && text[begin - 1] != '\n')
    --begin;
  std::size_t end = text.find('\n', begin);
  if (end == std::string_view::npos)
    end = text.size();
  out += "  " + std::string(text.substr(begin, end - begin)) + "\n";
  out += "  " + std::string(pos.column - 1, ' ') + "^\n";
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  }
  return true;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
public:
  Lexer(std::string_view text, std::string_view what) : text_(text), what_(what) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(char punct) {
    if (current_.kind == Token::Kind::Punct && current_.text[0] == punct) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char punct) {
    if (!accept(punct))
      fail(current_.offset, std::string("expected '") + punct + "', found " + describe(current_));
  }

  [[noreturn]] void fail(std::size_t offset, std::string_view message) const {
    throw CliError(ExitCode::ParseError, render_diagnostic(what_, text_, offset, message));
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? std::string("end of input") : "'" + t.text + "'";
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) {
      current_ = {Token::Kind::End, "", start};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      current_ = {Token::Kind::Number, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::string_view("()|&~,").find(c) != std::string_view::npos) {
      ++pos_;
      current_ = {Token::Kind::Punct, std::string(1, c), start};
      return;
    }
    fail(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::string_view what_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, "", 0};
};

// ------------------------------------------------------------ set expressions

constexpr std::string_view kSetWhat = "set expression";

class SetParser {
public:
  SetParser(std::string_view text, const MeasurableSpace& space) : text_(text), lex_(text, kSetWhat), space_(space) {}

  MeasurableSet parse() {
    MeasurableSet s = parse_union();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.fail(lex_.peek().offset, "unexpected " + Lexer::describe(lex_.peek()) + " after expression");
    return s;
  }

private:
  MeasurableSet parse_union() {
    MeasurableSet s = parse_intersection();
    while (lex_.accept('|'))
      s = unite(s, parse_intersection());
    return s;
  }

  MeasurableSet parse_intersection() {
    MeasurableSet s = parse_unary();
    while (lex_.accept('&'))
      s = intersect(s, parse_unary());
    return s;
  }

  MeasurableSet parse_unary() {
    if (lex_.accept('~'))
      return complement(parse_unary());
    return parse_primary();
  }

  MeasurableSet parse_primary() {
    if (lex_.accept('(')) {
      MeasurableSet s = parse_union();
      lex_.expect(')');
      return s;
    }
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::Ident)
      lex_.fail(t.offset, "expected an atom, 'empty', 'all' or '(', found " + Lexer::describe(t));
    lex_.take();
    if (t.text == "empty")
      return space_.empty_set();
    if (t.text == "all")
      return space_.full_set();
    const auto atom = space_.find_atom(t.text);
    if (!atom)
      throw CliError(ExitCode::SemanticError, render_diagnostic(kSetWhat, text_, t.offset, "unknown atom '" + t.text + "'"));
    return space_.atom(*atom);
  }

  std::string_view text_;
  Lexer lex_;
  const MeasurableSpace& space_;
};

// -------------------------------------------------------- measure expressions

constexpr std::string_view kMeasureWhat = "measure expression";

class MeasureParser {
public:
  explicit MeasureParser(std::string_view text) : lex_(text, kMeasureWhat) {}

  MeasureExpr parse() {
    MeasureExpr e = parse_expr();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.fail(lex_.peek().offset, "unexpected " + Lexer::describe(lex_.peek()) + " after expression");
    return e;
  }

private:
  using Kind = MeasureExpr::Kind;

  MeasureExpr parse_expr() {
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::Ident)
      lex_.fail(t.offset, "expected a measure, found " + Lexer::describe(t));
    lex_.take();

    MeasureExpr e;
    e.offset = t.offset;
    if (!lex_.accept('(')) {
      if (t.text == "zero")
        e.kind = Kind::Zero;
      else if (t.text == "infinity")
        e.kind = Kind::Infinity;
      else
        e.name = t.text;
      return e;
    }

    if (t.text == "scale") {
      const Token num = lex_.peek();
      if (num.kind != Token::Kind::Number)
        lex_.fail(num.offset, "scale expects a nonnegative rational factor, found " + Lexer::describe(num));
      lex_.take();
      try {
        e.factor = parse_rational(num.text);
      } catch (const Error&) {
        lex_.fail(num.offset, "malformed rational '" + num.text + "'");
      }
      lex_.expect(',');
      e.kind = Kind::Scale;
      e.args.push_back(parse_expr());
      lex_.expect(')');
      return e;
    }

    std::size_t min_args = 2;
    std::size_t max_args = 2;
    if (t.text == "meet" || t.text == "join") {
      e.kind = t.text == "meet" ? Kind::Meet : Kind::Join;
      min_args = 1;
      max_args = SIZE_MAX;
    } else if (t.text == "meet_jordan") {
      e.kind = Kind::MeetJordan;
    } else if (t.text == "join_jordan") {
      e.kind = Kind::JoinJordan;
    } else if (t.text == "add") {
      e.kind = Kind::Add;
    } else {
      lex_.fail(t.offset, "unknown function '" + t.text + "'");
    }

    e.args.push_back(parse_expr());
    while (lex_.accept(','))
      e.args.push_back(parse_expr());
    const Token close = lex_.peek();
    lex_.expect(')');
    if (e.args.size() < min_args || e.args.size() > max_args) {
      lex_.fail(close.offset, t.text + " takes " + std::to_string(min_args) + " arguments, got " +
                                  std::to_string(e.args.size()));
    }
    return e;
  }

  Lexer lex_;
};

} // namespace

MeasurableSet evaluate_set(std::string_view text, const MeasurableSpace& space) {
  return SetParser(text, space).parse();
}

MeasureExpr parse_measure_expression(std::string_view text) { return MeasureParser(text).parse(); }

Measure evaluate_measure(const MeasureExpr& expr, std::string_view text, const MeasurableSpace& space,
                         const MeasureLookup& lookup) {
  using Kind = MeasureExpr::Kind;
  const auto eval_arg = [&](std::size_t i) { return evaluate_measure(expr.args[i], text, space, lookup); };
  try {
    switch (expr.kind) {
    case Kind::Name: {
      const Measure* m = lookup(expr.name);
      if (m == nullptr) {
        throw CliError(ExitCode::SemanticError,
                       render_diagnostic(kMeasureWhat, text, expr.offset, "unknown measure '" + expr.name + "'"));
      }
      return *m;
    }
    case Kind::Zero: return zero_measure(space);
    case Kind::Infinity: return infinity_measure(space);
    case Kind::Meet:
    case Kind::Join: {
      std::vector<Measure> members;
      for (std::size_t i = 0; i < expr.args.size(); ++i)
        members.push_back(eval_arg(i));
      if (members.size() == 2)
        return expr.kind == Kind::Meet ? meet2(members[0], members[1]) : join2(members[0], members[1]);
      const MeasureFamily f(std::move(members));
      return expr.kind == Kind::Meet ? meet_family(f) : join_family(f);
    }
    case Kind::MeetJordan: return meet_via_jordan(eval_arg(0), eval_arg(1));
    case Kind::JoinJordan: return join_via_jordan(eval_arg(0), eval_arg(1));
    case Kind::Add: return add_measures(eval_arg(0), eval_arg(1));
    case Kind::Scale: return scale(expr.factor, eval_arg(0));
    }
  } catch (const Error& e) {
    throw CliError(ExitCode::SemanticError,
                   render_diagnostic(kMeasureWhat, text, expr.offset, std::string(to_string(e.kind())) + ": " + e.what()));
  }
  throw CliError(ExitCode::SemanticError, "error: unhandled measure expression");
}

} // namespace measlat::cli
