#ifndef CLLR_SYNTAX_HPP
#define CLLR_SYNTAX_HPP

// ASCII surface syntax:
//
//   term   := par
//   par    := choice ( "|[" [action ("," action)*] "]|" choice )*
//   choice := disj   ( "[]" disj )*
//   disj   := conj   ( "\/" conj )*
//   conj   := prefix ( "/\" prefix )*
//   prefix := action "." prefix | "tau" "." prefix | atom
//   atom   := "0" | "bot" | VAR | "(" term ")" | "<" VAR "|" VAR "=" term ("," VAR "=" term)* ">"
//
// Variables start with an uppercase letter, actions with a lowercase letter.
// All binary operators are left-associative.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cllr/analysis.hpp"
#include "cllr/errors.hpp"
#include "cllr/substitution.hpp"
#include "cllr/term.hpp"

namespace cllr {

namespace detail {

enum class Tok {
  End,
  Zero,
  Bot,
  Tau,
  Action,
  Var,
  Dot,
  Choice,   // []
  Conj,     // "/\\"
  Disj,     // "\\/"
  ParOpen,  // |[
  ParClose, // ]|
  Bar,      // |
  LParen,
  RParen,
  LAngle,
  RAngle,
  Eq,
  Comma,
};

inline const char *describe(Tok t) {
  switch (t) {
  case Tok::End:
    return "end of input";
  case Tok::Zero:
    return "'0'";
  case Tok::Bot:
    return "'bot'";
  case Tok::Tau:
    return "'tau'";
  case Tok::Action:
    return "action";
  case Tok::Var:
    return "variable";
  case Tok::Dot:
    return "'.'";
  case Tok::Choice:
    return "'[]'";
  case Tok::Conj:
    return "'/\\'";
  case Tok::Disj:
    return "'\\/'";
  case Tok::ParOpen:
    return "'|['";
  case Tok::ParClose:
    return "']|'";
  case Tok::Bar:
    return "'|'";
  case Tok::LParen:
    return "'('";
  case Tok::RParen:
    return "')'";
  case Tok::LAngle:
    return "'<'";
  case Tok::RAngle:
    return "'>'";
  case Tok::Eq:
    return "'='";
  case Tok::Comma:
    return "','";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back(Token{k, std::string(src.substr(i, len)), {i, i + len}});
    i += len;
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    auto next = [&](std::size_t k) { return i + k < src.size() ? src[i + k] : '\0'; };
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      Tok k = Tok::Action;
      if (word == "tau")
        k = Tok::Tau;
      else if (word == "bot")
        k = Tok::Bot;
      else if (std::isupper(c))
        k = Tok::Var;
      else if (c == '_')
        throw ParseError({i, j}, "identifiers must start with a letter", {"action", "variable"});
      push(k, j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j])))
        ++j;
      if (j - i != 1 || c != '0')
        throw ParseError({i, j}, "unexpected numeral '" + std::string(src.substr(i, j - i)) + "'",
                         {"'0'"});
      push(Tok::Zero, 1);
      continue;
    }
    switch (c) {
    case '.':
      push(Tok::Dot, 1);
      continue;
    case '(':
      push(Tok::LParen, 1);
      continue;
    case ')':
      push(Tok::RParen, 1);
      continue;
    case '<':
      push(Tok::LAngle, 1);
      continue;
    case '>':
      push(Tok::RAngle, 1);
      continue;
    case '=':
      push(Tok::Eq, 1);
      continue;
    case ',':
      push(Tok::Comma, 1);
      continue;
    case '[':
      if (next(1) == ']') {
        push(Tok::Choice, 2);
        continue;
      }
      break;
    case ']':
      if (next(1) == '|') {
        push(Tok::ParClose, 2);
        continue;
      }
      break;
    case '|':
      if (next(1) == '[') {
        push(Tok::ParOpen, 2);
        continue;
      }
      push(Tok::Bar, 1);
      continue;
    case '/':
      if (next(1) == '\\') {
        push(Tok::Conj, 2);
        continue;
      }
      break;
    case '\\':
      if (next(1) == '/') {
        push(Tok::Disj, 2);
        continue;
      }
      break;
    default:
      break;
    }
    // Report the whole UTF-8 sequence as one character.
    std::size_t len = 1;
    if (c >= 0xC0)
      len = c >= 0xF0 ? 4 : (c >= 0xE0 ? 3 : 2);
    len = std::min(len, src.size() - i);
    throw ParseError({i, i + len}, "unexpected character '" + std::string(src.substr(i, len)) + "'");
  }
  out.push_back(Token{Tok::End, "", {src.size(), src.size()}});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term parse_all() {
    Term t = par();
    if (peek().kind != Tok::End)
      fail({"'|['", "'[]'", "'\\/'", "'/\\'", describe(Tok::End)});
    return t;
  }

private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k)
      return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token &t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    std::string msg = "unexpected " + got;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i)
        msg += (i ? " or " : "") + expected[i];
    }
    throw ParseError(t.span, msg, std::move(expected));
  }
  const Token &expect(Tok k) {
    if (peek().kind != k)
      fail({describe(k)});
    return take();
  }

  Term par() {
    Term t = choice();
    while (accept(Tok::ParOpen)) {
      ActionSet sync;
      if (peek().kind != Tok::ParClose) {
        do {
          if (peek().kind == Tok::Tau)
            throw ParseError(peek().span, "tau cannot be synchronised", {"action"});
          sync.insert(expect(Tok::Action).text);
        } while (accept(Tok::Comma));
      }
      expect(Tok::ParClose);
      t = Term::parallel(std::move(sync), t, choice());
    }
    return t;
  }
  Term choice() {
    Term t = disj();
    while (accept(Tok::Choice))
      t = Term::ext_choice(t, disj());
    return t;
  }
  Term disj() {
    Term t = conj();
    while (accept(Tok::Disj))
      t = Term::disj(t, conj());
    return t;
  }
  Term conj() {
    Term t = prefix();
    while (accept(Tok::Conj))
      t = Term::conj(t, prefix());
    return t;
  }
  Term prefix() {
    if (peek().kind == Tok::Action || peek().kind == Tok::Tau) {
      const Token &a = take();
      expect(Tok::Dot);
      Action act = a.kind == Tok::Tau ? Action::tau() : Action::visible(a.text);
      return Term::prefix(std::move(act), prefix());
    }
    return atom();
  }
  Term atom() {
    switch (peek().kind) {
    case Tok::Zero:
      take();
      return Term::nil();
    case Tok::Bot:
      take();
      return Term::bottom();
    case Tok::Var:
      return Term::var(take().text);
    case Tok::LParen: {
      take();
      Term t = par();
      expect(Tok::RParen);
      return t;
    }
    case Tok::LAngle:
      return rec();
    default:
      fail({"'0'", "'bot'", "action", "'tau'", "variable", "'('", "'<'"});
    }
  }
  Term rec() {
    std::size_t start = take().span.start;
    const Token &sel = expect(Tok::Var);
    std::string selected = sel.text;
    SourceSpan sel_span = sel.span;
    expect(Tok::Bar);
    RecSpec spec;
    do {
      const Token &v = expect(Tok::Var);
      std::string name = v.text;
      SourceSpan vspan = v.span;
      expect(Tok::Eq);
      Term rhs = par();
      if (!spec.emplace(name, rhs).second)
        throw ParseError(vspan, "duplicate equation for " + name);
    } while (accept(Tok::Comma));
    std::size_t end = expect(Tok::RAngle).span.end;
    if (!spec.count(selected))
      throw UnboundRecVar(selected, sel_span);
    Term t = Term::rec(selected, std::move(spec));
    spans_.emplace(t.node(), SourceSpan{start, end});
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

public:
  std::map<const Node *, SourceSpan> spans_;
};

/// Renames recursion variables so that distinct specifications bind disjoint
/// variable sets and no binder reuses a free variable's name. Structurally
/// identical specifications (copies made by unfolding) keep one shared name
/// set, which makes the pass idempotent.
class Normalizer {
public:
  explicit Normalizer(const Term &whole) : reserved_(free_vars(whole)) {}

  Term run(const Term &t) { return go(t, {}, {}); }

private:
  Term go(const Term &t, const Bindings &env, const VarSet &in_scope) {
    switch (t.kind()) {
    case Kind::Nil:
    case Kind::Bottom:
      return t;
    case Kind::Var: {
      auto it = env.find(t.name());
      return it == env.end() ? t : it->second;
    }
    case Kind::Prefix:
      return Term::prefix(t.action(), go(t.body(), env, in_scope));
    case Kind::ExtChoice:
      return Term::ext_choice(go(t.left(), env, in_scope), go(t.right(), env, in_scope));
    case Kind::Conj:
      return Term::conj(go(t.left(), env, in_scope), go(t.right(), env, in_scope));
    case Kind::Disj:
      return Term::disj(go(t.left(), env, in_scope), go(t.right(), env, in_scope));
    case Kind::Parallel:
      return Term::parallel(t.sync(), go(t.left(), env, in_scope), go(t.right(), env, in_scope));
    case Kind::Rec:
      return rec(t, env, in_scope);
    }
    return t;
  }

  Term build(const Term &t, const std::map<std::string, std::string> &names, Bindings env,
             VarSet in_scope) {
    for (const auto &[old, nw] : names) {
      env[old] = Term::var(nw);
      in_scope.insert(nw);
    }
    RecSpec spec;
    for (const auto &[v, rhs] : t.spec())
      spec.emplace(names.at(v), go(rhs, env, in_scope));
    return Term::rec(names.at(t.name()), std::move(spec));
  }

  Term rec(const Term &t, const Bindings &env, const VarSet &in_scope) {
    std::map<std::string, std::string> names;
    for (const auto &[v, _] : t.spec())
      names.emplace(v, v);

    auto saved = registry_;
    Term candidate = build(t, names, env, in_scope);
    bool ok = true;
    for (const auto &[v, _] : t.spec()) {
      if (reserved_.count(v) || in_scope.count(v)) {
        ok = false;
        break;
      }
      auto it = registry_.find(v);
      if (it != registry_.end() && !spec_equal(*it->second, candidate.spec())) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      registry_ = std::move(saved);
      VarSet taken = reserved_;
      for (const auto &v : in_scope)
        taken.insert(v);
      for (const auto &[v, _] : registry_)
        taken.insert(v);
      for (const auto &[v, _] : t.spec())
        taken.insert(v);
      for (auto &[old, nw] : names) {
        nw = fresh_name(old, taken);
        taken.insert(nw);
      }
      candidate = build(t, names, env, in_scope);
    }
    for (const auto &[v, _] : candidate.spec())
      registry_.emplace(v, candidate.spec_ptr());
    return candidate;
  }

  VarSet reserved_;
  std::map<std::string, RecSpecPtr> registry_;
};

} // namespace detail

/// Rename recursion variables to satisfy the distinct-variables convention.
inline Term normalize(const Term &t) { return detail::Normalizer(t).run(t); }

/// Parse, normalize and check guardedness. Throws ParseError,
/// GuardednessError or UnboundRecVar.
inline Term parse(std::string_view text) {
  detail::Parser p(text);
  Term raw = p.parse_all();
  if (auto bad = find_unguarded(raw)) {
    SourceSpan span{0, text.size()};
    // Locate the offending specification for the error span.
    for (const auto &[node, sp] : p.spans_)
      if (node->spec->count(bad->variable) && node->spec->count(bad->equation)) {
        span = sp;
        break;
      }
    throw GuardednessError(bad->variable, bad->equation, span);
  }
  return normalize(raw);
}

namespace detail {

// Binding strength; higher binds tighter.
inline int level(const Term &t) {
  switch (t.kind()) {
  case Kind::Parallel:
    return 1;
  case Kind::ExtChoice:
    return 2;
  case Kind::Disj:
    return 3;
  case Kind::Conj:
    return 4;
  case Kind::Prefix:
    return 5;
  default:
    return 6;
  }
}

inline void print_to(std::ostream &os, const Term &t);

inline void print_at(std::ostream &os, const Term &t, int min_level) {
  if (level(t) < min_level) {
    os << '(';
    print_to(os, t);
    os << ')';
  } else {
    print_to(os, t);
  }
}

inline void print_to(std::ostream &os, const Term &t) {
  switch (t.kind()) {
  case Kind::Nil:
    os << '0';
    return;
  case Kind::Bottom:
    os << "bot";
    return;
  case Kind::Var:
    os << t.name();
    return;
  case Kind::Prefix:
    os << t.action().label() << '.';
    print_at(os, t.body(), 5);
    return;
  case Kind::Rec: {
    os << '<' << t.name() << " | " << t.name() << " = ";
    print_to(os, t.rec_body());
    for (const auto &[v, rhs] : t.spec()) {
      if (v == t.name())
        continue;
      os << ", " << v << " = ";
      print_to(os, rhs);
    }
    os << '>';
    return;
  }
  default: {
    int lv = level(t);
    print_at(os, t.left(), lv);
    switch (t.kind()) {
    case Kind::ExtChoice:
      os << " [] ";
      break;
    case Kind::Conj:
      os << " /\\ ";
      break;
    case Kind::Disj:
      os << " \\/ ";
      break;
    default: {
      os << " |[";
      bool first = true;
      for (const auto &a : t.sync()) {
        os << (first ? "" : ",") << a;
        first = false;
      }
      os << "]| ";
    }
    }
    print_at(os, t.right(), lv + 1);
    return;
  }
  }
}

} // namespace detail

/// Canonical text with minimal parentheses.
inline std::string print(const Term &t) {
  std::ostringstream os;
  detail::print_to(os, t);
  return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const Term &t) {
  detail::print_to(os, t);
  return os;
}

} // namespace cllr

#endif // CLLR_SYNTAX_HPP
