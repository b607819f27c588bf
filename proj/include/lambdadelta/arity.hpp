#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "lambdadelta/environment.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

// Simple type over the single base type Atom.
class Arity {
 public:
  static Arity atom() { return Arity(); }
  static Arity fun(Arity source, Arity target) {
    Arity a;
    a.parts_ = std::make_shared<const std::pair<Arity, Arity>>(std::move(source), std::move(target));
    return a;
  }

  bool is_atom() const noexcept { return !parts_; }
  const Arity& source() const noexcept { return parts_->first; }
  const Arity& target() const noexcept { return parts_->second; }

  friend bool operator==(const Arity& a, const Arity& b) {
    if (a.is_atom() || b.is_atom()) return a.is_atom() == b.is_atom();
    return a.parts_ == b.parts_ || (a.source() == b.source() && a.target() == b.target());
  }

  std::string to_string() const {
    if (is_atom()) return "*";
    return "(" + source().to_string() + "->" + target().to_string() + ")";
  }

 private:
  std::shared_ptr<const std::pair<Arity, Arity>> parts_;
};

inline std::optional<Arity> infer_arity(const Environment& L, const Term& T) {
  switch (T.kind()) {
    case Kind::Sort:
      return Arity::atom();
    case Kind::Ref: {
      const Entry* e = L.lookup(T.index());
      if (!e || e->is_void()) return std::nullopt;
      return infer_arity(L.prefix_of(T.index()), e->term());
    }
    case Kind::Abst: {
      auto w = infer_arity(L, T.item());
      if (!w) return std::nullopt;
      auto b = infer_arity(L.push(Entry::decl(T.item())), T.body());
      if (!b) return std::nullopt;
      return Arity::fun(std::move(*w), std::move(*b));
    }
    case Kind::Abbr: {
      if (!infer_arity(L, T.item())) return std::nullopt;
      return infer_arity(L.push(Entry::defn(T.item())), T.body());
    }
    case Kind::Appl: {
      auto v = infer_arity(L, T.item());
      if (!v) return std::nullopt;
      auto f = infer_arity(L, T.body());
      if (!f || f->is_atom() || !(f->source() == *v)) return std::nullopt;
      return f->target();
    }
    case Kind::Cast: {
      auto u = infer_arity(L, T.item());
      if (!u) return std::nullopt;
      auto t = infer_arity(L, T.body());
      if (!t || !(*t == *u)) return std::nullopt;
      return t;
    }
  }
  return std::nullopt;
}

}  // namespace ld
