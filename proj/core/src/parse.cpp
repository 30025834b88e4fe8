#include "linmod/parse.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace linmod {

namespace {

const std::array<std::string_view, 21> kReserved = {
    "bot",  "T",     "->",     "not",    "and",    "or",     "iff",
    "box",  "dia",   "boxp",   "pdia1",  "pdia2",  "xbox",   "boxn",
    "dian", "pdia1n", "pdia2n", "xboxn",  "forall", "exists", "next",
};

struct Token {
  enum Type { LParen, RParen, Word, End } type;
  std::string_view text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    if (pos_ >= text_.size()) return {Token::End, {}, line_, col_};
    char c = text_[pos_];
    if (c == '(') return single(Token::LParen);
    if (c == ')') return single(Token::RParen);
    int line = line_, col = col_;
    size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
      ++col_;
    }
    return {Token::Word, text_.substr(start, pos_ - start), line, col};
  }

 private:
  Token single(Token::Type t) {
    Token tok{t, text_.substr(pos_, 1), line_, col_};
    ++pos_;
    ++col_;
    return tok;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void syntax_error(const Token& at, const std::string& msg) {
  std::ostringstream os;
  os << "syntax error at " << at.line << ":" << at.col << ": " << msg;
  fail(ErrorKind::Syntax, os.str());
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) {}

  Formula run() {
    tok_ = lex_.next();
    Formula f = formula();
    if (tok_.type != Token::End) syntax_error(tok_, "trailing input after formula");
    return f;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  std::string_view expect_word(const char* what) {
    if (tok_.type != Token::Word) syntax_error(tok_, std::string("expected ") + what);
    std::string_view w = tok_.text;
    advance();
    return w;
  }

  void expect_rparen() {
    if (tok_.type != Token::RParen) syntax_error(tok_, "expected )");
    advance();
  }

  int expect_count() {
    Token at = tok_;
    std::string_view w = expect_word("repetition count");
    int n = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), n);
    if (ec != std::errc() || p != w.data() + w.size() || n < 0)
      syntax_error(at, "repetition count must be a nonnegative integer");
    return n;
  }

  VarId expect_var() {
    Token at = tok_;
    std::string_view w = expect_word("variable");
    if (is_reserved_word(w)) syntax_error(at, "reserved word used as variable");
    auto v = sig_.find_var(w);
    if (!v) fail(ErrorKind::Undeclared, "undeclared variable " + std::string(w));
    return *v;
  }

  LetterId guard_prop(const char* name, const char* op) {
    auto id = sig_.find_letter(name);
    if (!id || sig_.letter(*id).arity != 0)
      fail(ErrorKind::Undeclared,
           std::string(op) + " needs a declared proposition letter " + name);
    return *id;
  }

  LetterId guard_mono(const char* name, const char* op) {
    auto id = sig_.find_letter(name);
    if (!id || sig_.letter(*id).arity != 1)
      fail(ErrorKind::Undeclared, std::string(op) + " needs a declared monadic letter " + name);
    return *id;
  }

  VarId guard_var(const char* op) {
    auto v = sig_.find_var("x");
    if (!v) fail(ErrorKind::Undeclared, std::string(op) + " needs a declared variable x");
    return *v;
  }

  Formula formula() {
    if (tok_.type == Token::Word) {
      Token at = tok_;
      std::string_view w = tok_.text;
      advance();
      if (w == "bot") return mk::bottom();
      if (w == "T") return mk::top();
      if (is_reserved_word(w)) syntax_error(at, "operator " + std::string(w) + " needs parentheses");
      auto id = sig_.find_letter(w);
      if (!id) fail(ErrorKind::Undeclared, "undeclared letter " + std::string(w));
      return mk::atom(sig_, *id, {});
    }
    if (tok_.type != Token::LParen) syntax_error(tok_, "expected formula");
    advance();
    Token head = tok_;
    std::string_view op = expect_word("operator or letter");

    if (op == "->") {
      Formula a = formula();
      Formula b = formula();
      expect_rparen();
      return mk::implies(std::move(a), std::move(b));
    }
    if (op == "not") return close_unary([](Formula a) { return mk::negate(std::move(a)); });
    if (op == "and" || op == "or") {
      std::vector<Formula> kids;
      while (tok_.type != Token::RParen && tok_.type != Token::End) kids.push_back(formula());
      if (kids.size() < 2) syntax_error(head, std::string(op) + " needs at least two operands");
      expect_rparen();
      return op == "and" ? mk::conj(std::move(kids)) : mk::disj(std::move(kids));
    }
    if (op == "iff") {
      Formula a = formula();
      Formula b = formula();
      expect_rparen();
      return mk::iff(std::move(a), std::move(b));
    }
    if (op == "box") return close_unary([](Formula a) { return mk::box(std::move(a)); });
    if (op == "dia") return close_unary([](Formula a) { return mk::diamond(std::move(a)); });
    if (op == "boxp") return close_unary([](Formula a) { return mk::box_plus(std::move(a)); });
    if (op == "pdia1") {
      LetterId g = guard_prop("p", "pdia1");
      return close_unary([g](Formula a) { return mk::pdia1(g, std::move(a)); });
    }
    if (op == "pdia2") {
      LetterId g = guard_mono("P", "pdia2");
      VarId v = guard_var("pdia2");
      return close_unary([g, v](Formula a) { return mk::pdia2(g, v, std::move(a)); });
    }
    if (op == "xbox") {
      LetterId g = guard_prop("q", "xbox");
      return close_unary([g](Formula a) { return mk::xbox(g, std::move(a)); });
    }
    if (op == "boxn") {
      int n = expect_count();
      return close_unary([n](Formula a) { return mk::box_iter(n, std::move(a)); });
    }
    if (op == "dian") {
      int n = expect_count();
      return close_unary([n](Formula a) { return mk::dia_iter(n, std::move(a)); });
    }
    if (op == "pdia1n") {
      LetterId g = guard_prop("p", "pdia1n");
      int n = expect_count();
      return close_unary([g, n](Formula a) { return mk::pdia1_iter(g, n, std::move(a)); });
    }
    if (op == "pdia2n") {
      LetterId g = guard_mono("P", "pdia2n");
      VarId v = guard_var("pdia2n");
      int n = expect_count();
      return close_unary([g, v, n](Formula a) { return mk::pdia2_iter(g, v, n, std::move(a)); });
    }
    if (op == "xboxn") {
      LetterId g = guard_prop("q", "xboxn");
      int n = expect_count();
      Formula a = formula();
      expect_rparen();
      for (int i = 0; i < n; ++i) a = mk::xbox(g, std::move(a));
      return a;
    }
    if (op == "forall" || op == "exists") {
      VarId v = expect_var();
      Formula a = formula();
      expect_rparen();
      return op == "forall" ? mk::forall(v, std::move(a)) : mk::exists(v, std::move(a));
    }
    if (op == "next") return close_unary([](Formula a) { return mk::next(std::move(a)); });

    // atom with arguments
    auto id = sig_.find_letter(op);
    if (!id) fail(ErrorKind::Undeclared, "undeclared letter " + std::string(op));
    std::vector<VarId> args;
    while (tok_.type != Token::RParen && tok_.type != Token::End) args.push_back(expect_var());
    expect_rparen();
    return mk::atom(sig_, *id, std::move(args));
  }

  template <typename F>
  Formula close_unary(F make) {
    Formula a = formula();
    expect_rparen();
    return make(std::move(a));
  }

  Lexer lex_;
  const Signature& sig_;
  Token tok_{Token::End, {}, 0, 0};
};

// ── Printing ─────────────────────────────────────────────────────────────────

struct Printer {
  const Signature& sig;
  std::ostringstream out;

  void guard_check(const Formula& f, const char* name, int arity, const char* op) {
    const Letter& l = sig.letter(f.letter());
    if (l.name != name || l.arity != arity)
      fail(ErrorKind::Unsupported,
           std::string(op) + " with non-canonical guard letter " + l.name + " is not printable");
  }

  void run(const Formula& f) {
    const FormulaNode& n = f.node();
    switch (n.kind) {
      case Kind::Atom: {
        const Letter& l = sig.letter(n.letter);
        if (n.args.empty()) {
          out << l.name;
          return;
        }
        out << '(' << l.name;
        for (VarId v : n.args) out << ' ' << sig.var(v);
        out << ')';
        return;
      }
      case Kind::Bottom:
        out << "bot";
        return;
      case Kind::Top:
        out << "T";
        return;
      case Kind::Implies:
        binary("->", f);
        return;
      case Kind::Not:
        unary("not", f);
        return;
      case Kind::And:
      case Kind::Or:
        out << '(' << (n.kind == Kind::And ? "and" : "or");
        for (const auto& k : n.kids) {
          out << ' ';
          run(k);
        }
        out << ')';
        return;
      case Kind::Iff:
        binary("iff", f);
        return;
      case Kind::Box:
        unary("box", f);
        return;
      case Kind::Diamond:
        unary("dia", f);
        return;
      case Kind::BoxPlus:
        unary("boxp", f);
        return;
      case Kind::PDia1:
        guard_check(f, "p", 0, "pdia1");
        unary("pdia1", f);
        return;
      case Kind::PDia2:
        guard_check(f, "P", 1, "pdia2");
        unary("pdia2", f);
        return;
      case Kind::XBox:
        guard_check(f, "q", 0, "xbox");
        unary("xbox", f);
        return;
      case Kind::BoxIter:
        iterated("boxn", f);
        return;
      case Kind::DiaIter:
        iterated("dian", f);
        return;
      case Kind::PDia1Iter:
        guard_check(f, "p", 0, "pdia1n");
        iterated("pdia1n", f);
        return;
      case Kind::PDia2Iter:
        guard_check(f, "P", 1, "pdia2n");
        iterated("pdia2n", f);
        return;
      case Kind::Forall:
        binder("forall", f);
        return;
      case Kind::Exists:
        binder("exists", f);
        return;
      case Kind::Next:
        unary("next", f);
        return;
    }
    fail(ErrorKind::Internal, "unreachable formula kind");
  }

  void unary(const char* op, const Formula& f) {
    out << '(' << op << ' ';
    run(f.kid(0));
    out << ')';
  }

  void binary(const char* op, const Formula& f) {
    out << '(' << op << ' ';
    run(f.kid(0));
    out << ' ';
    run(f.kid(1));
    out << ')';
  }

  void binder(const char* op, const Formula& f) {
    out << '(' << op << ' ' << sig.var(f.var()) << ' ';
    run(f.kid(0));
    out << ')';
  }

  void iterated(const char* op, const Formula& f) {
    out << '(' << op << ' ' << f.iter() << ' ';
    run(f.kid(0));
    out << ')';
  }
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  for (auto k : kReserved)
    if (k == word) return true;
  return false;
}

Formula parse(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  return p.run();
}

std::string print(const Formula& f, const Signature& sig) {
  Printer p{sig, {}};
  p.run(f);
  return p.out.str();
}

}  // namespace linmod
