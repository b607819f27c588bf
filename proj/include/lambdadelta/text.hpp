#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdadelta/environment.hpp"
#include "lambdadelta/errors.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

// Surface syntax:
//
//   term    ::= *N | name | #N | @(term).term | [name:term].term
//             | [name=term].term | <term>.term | (term)
//   entry   ::= name:term | name=term | name!
//   closure ::= [entry (; entry)*] |- term
//
// A closure without "|-" is a bare term in the empty environment. #N is
// the free variable N positions beyond everything bound in scope. "%"
// starts a comment running to the end of the line.

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src, std::vector<std::string> scope = {}) : src_(src), scope_(std::move(scope)) {}

  const std::vector<std::string>& scope() const noexcept { return scope_; }

  Closure closure() {
    std::vector<Entry> entries;
    if (has_turnstile()) {
      skip();
      if (!at("|-")) {
        for (;;) {
          entries.push_back(entry());
          skip();
          if (at(";")) {
            advance(1);
            continue;
          }
          break;
        }
      }
      expect("|-");
    }
    Term t = term();
    skip();
    if (pos_ < src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return {Environment(entries), std::move(t)};
  }

  Term lone_term() {
    Term t = term();
    skip();
    if (pos_ < src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    auto [line, col] = location(pos_);
    throw ParseError(what, line, col);
  }

  std::pair<std::size_t, std::size_t> location(std::size_t p) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < p && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool has_turnstile() const {
    bool comment = false;
    for (std::size_t k = 0; k + 1 < src_.size(); ++k) {
      if (src_[k] == '\n') comment = false;
      if (src_[k] == '%') comment = true;
      if (!comment && src_[k] == '|' && src_[k + 1] == '-') return true;
    }
    return false;
  }

  bool at(std::string_view tok) const { return src_.substr(pos_, tok.size()) == tok; }
  void advance(std::size_t n) { pos_ += n; }

  void expect(std::string_view tok) {
    skip();
    if (!at(tok)) {
      if (pos_ >= src_.size()) error("expected '" + std::string(tok) + "' before end of input");
      error("expected '" + std::string(tok) + "'");
    }
    advance(tok.size());
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string name() {
    skip();
    if (pos_ >= src_.size() || !name_start(src_[pos_])) error("expected a name");
    const std::size_t start = pos_;
    while (pos_ < src_.size() && name_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) error("expected a number");
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) error("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Entry entry() {
    std::string n = name();
    skip();
    if (at(":")) {
      advance(1);
      Term t = term();
      scope_.push_back(std::move(n));
      return Entry::decl(std::move(t));
    }
    if (at("=")) {
      advance(1);
      Term t = term();
      scope_.push_back(std::move(n));
      return Entry::defn(std::move(t));
    }
    if (at("!")) {
      advance(1);
      scope_.push_back(std::move(n));
      return Entry::excluded();
    }
    error("expected ':', '=' or '!' after entry name");
  }

  Term term() {
    skip();
    if (pos_ >= src_.size()) error("expected a term before end of input");
    const char c = src_[pos_];
    if (c == '*') {
      advance(1);
      return Term::sort(number());
    }
    if (c == '#') {
      advance(1);
      return Term::ref(static_cast<std::size_t>(number()) + scope_.size());
    }
    if (c == '@') {
      advance(1);
      expect("(");
      Term v = term();
      expect(")");
      expect(".");
      return Term::appl(std::move(v), term());
    }
    if (c == '<') {
      advance(1);
      Term u = term();
      expect(">");
      expect(".");
      return Term::cast(std::move(u), term());
    }
    if (c == '[') {
      advance(1);
      std::string n = name();
      skip();
      Kind k;
      if (at(":"))
        k = Kind::Abst;
      else if (at("="))
        k = Kind::Abbr;
      else
        error("expected ':' or '=' after binder name");
      advance(1);
      Term v = term();
      expect("]");
      expect(".");
      scope_.push_back(std::move(n));
      Term b = term();
      scope_.pop_back();
      return Term::binary(k, std::move(v), std::move(b));
    }
    if (c == '(') {
      advance(1);
      Term t = term();
      expect(")");
      return t;
    }
    if (name_start(c)) {
      const std::size_t start = pos_;
      std::string n = name();
      for (std::size_t k = scope_.size(); k-- > 0;)
        if (scope_[k] == n) return Term::ref(scope_.size() - 1 - k);
      auto [line, col] = location(start);
      throw UnboundName(n, line, col);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

inline void print_into(std::string& out, const Term& t, std::size_t level) {
  switch (t.kind()) {
    case Kind::Sort:
      out += '*';
      out += std::to_string(t.sort_id());
      return;
    case Kind::Ref:
      if (t.index() < level) {
        out += 'x';
        out += std::to_string(level - 1 - t.index());
      } else {
        out += '#';
        out += std::to_string(t.index() - level);
      }
      return;
    case Kind::Appl:
      out += "@(";
      print_into(out, t.item(), level);
      out += ").";
      print_into(out, t.body(), level);
      return;
    case Kind::Cast:
      out += '<';
      print_into(out, t.item(), level);
      out += ">.";
      print_into(out, t.body(), level);
      return;
    case Kind::Abst:
    case Kind::Abbr:
      out += "[x";
      out += std::to_string(level);
      out += t.is_abst() ? ':' : '=';
      print_into(out, t.item(), level);
      out += "].";
      print_into(out, t.body(), level + 1);
      return;
  }
}

}  // namespace detail

inline Closure parse_closure(std::string_view text) { return detail::Parser(text).closure(); }

// The closure together with the names of its entries, outermost first.
struct NamedClosure {
  Closure closure;
  std::vector<std::string> names;
};

inline NamedClosure parse_named_closure(std::string_view text) {
  detail::Parser p(text);
  Closure c = p.closure();
  return {std::move(c), p.scope()};
}

// A term whose free names resolve against scope (outermost first).
inline Term parse_term(std::string_view text, std::vector<std::string> scope = {}) {
  return detail::Parser(text, std::move(scope)).lone_term();
}

// Binders are named x0, x1, ... by level; level counts the binders in
// scope, starting at `level` (the size of the environment, if any).
inline std::string print_term(const Term& t, std::size_t level = 0) {
  std::string out;
  detail::print_into(out, t, level);
  return out;
}

inline std::string print_environment(const Environment& L) {
  std::string out;
  const auto entries = L.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += "; ";
    out += 'x';
    out += std::to_string(k);
    switch (entries[k].kind()) {
      case EntryKind::Decl:
        out += ':';
        detail::print_into(out, entries[k].term(), k);
        break;
      case EntryKind::Defn:
        out += '=';
        detail::print_into(out, entries[k].term(), k);
        break;
      case EntryKind::Void:
        out += '!';
        break;
    }
  }
  return out;
}

inline std::string print_closure(const Closure& c) {
  std::string env = print_environment(c.env);
  return (env.empty() ? "" : env + " ") + "|- " + print_term(c.subject, c.env.size());
}

}  // namespace ld
