#pragma once

#include <cstddef>
#include <optional>

#include "lambdadelta/term.hpp"

namespace ld {

namespace detail {

inline bool binds(const Term& t) { return t.is_pair(); }

}  // namespace detail

// Every Ref with index >= depth is increased by amount.
inline Term lift(const Term& t, std::size_t depth, std::size_t amount) {
  if (amount == 0 || t.open_bound() <= depth) return t;
  switch (t.kind()) {
    case Kind::Sort:
      return t;
    case Kind::Ref:
      return Term::ref(t.index() + amount);
    default: {
      const std::size_t inner = depth + (detail::binds(t) ? 1 : 0);
      return Term::binary(t.kind(), lift(t.item(), depth, amount), lift(t.body(), inner, amount));
    }
  }
}

// True iff Ref index (seen from the root of t) occurs free in t.
inline bool occurs_free(const Term& t, std::size_t index) {
  if (t.open_bound() <= index) return false;
  switch (t.kind()) {
    case Kind::Sort:
      return false;
    case Kind::Ref:
      return t.index() == index;
    default:
      return occurs_free(t.item(), index) || occurs_free(t.body(), index + (detail::binds(t) ? 1 : 0));
  }
}

// Inverse of lift: every Ref with index >= depth + amount is decreased by
// amount. Precondition: no free Ref in [depth, depth + amount).
inline Term lower(const Term& t, std::size_t depth, std::size_t amount) {
  if (amount == 0 || t.open_bound() <= depth) return t;
  switch (t.kind()) {
    case Kind::Sort:
      return t;
    case Kind::Ref:
      assert(t.index() < depth || t.index() >= depth + amount);
      return t.index() < depth ? t : Term::ref(t.index() - amount);
    default: {
      const std::size_t inner = depth + (detail::binds(t) ? 1 : 0);
      return Term::binary(t.kind(), lower(t.item(), depth, amount), lower(t.body(), inner, amount));
    }
  }
}

// Replaces the leftmost free occurrence of Ref depth with lift(value, 0,
// depth' + 1) where depth' is the binder depth at the occurrence. value
// lives in the environment just outside the variable being replaced.
// Returns nullopt when there is no such occurrence. This is exactly one
// delta step at that occurrence.
inline std::optional<Term> unfold_first(const Term& t, std::size_t depth, const Term& value) {
  if (t.open_bound() <= depth) return std::nullopt;
  switch (t.kind()) {
    case Kind::Sort:
      return std::nullopt;
    case Kind::Ref:
      if (t.index() == depth) return lift(value, 0, depth + 1);
      return std::nullopt;
    default: {
      if (auto l = unfold_first(t.item(), depth, value)) return Term::binary(t.kind(), std::move(*l), t.body());
      const std::size_t inner = depth + (detail::binds(t) ? 1 : 0);
      if (auto r = unfold_first(t.body(), inner, value)) return Term::binary(t.kind(), t.item(), std::move(*r));
      return std::nullopt;
    }
  }
}

}  // namespace ld
