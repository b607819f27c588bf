#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "lambdadelta/debruijn.hpp"
#include "lambdadelta/environment.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

// Variables as depth indices relative to a fixed environment.
using VarSet = std::set<std::size_t>;

namespace detail {

inline void add_shifted(VarSet& into, const VarSet& from, std::size_t by) {
  for (auto v : from) into.insert(v + by);
}

}  // namespace detail

// Free variables of T in L, closed under the entries they refer to.
// A reference that escapes L or resolves to an exclusion contributes only
// itself.
inline VarSet inherited_free_vars(const Environment& L, const Term& T) {
  VarSet out;
  switch (T.kind()) {
    case Kind::Sort:
      break;
    case Kind::Ref: {
      const std::size_t i = T.index();
      out.insert(i);
      const Entry* e = L.lookup(i);
      if (e && !e->is_void()) detail::add_shifted(out, inherited_free_vars(L.prefix_of(i), e->term()), i + 1);
      break;
    }
    case Kind::Abst:
    case Kind::Abbr: {
      out = inherited_free_vars(L, T.item());
      for (auto v : inherited_free_vars(L.push(Entry::of_binder(T)), T.body()))
        if (v > 0) out.insert(v - 1);
      break;
    }
    case Kind::Appl:
    case Kind::Cast: {
      out = inherited_free_vars(L, T.item());
      out.merge(inherited_free_vars(L, T.body()));
      break;
    }
  }
  return out;
}

// True iff every variable T refers to, directly or through the entries it
// reaches, is bound by a declaration or definition of L.
inline bool is_closed_in(const Environment& L, const Term& T) {
  if (T.open_bound() == 0) return true;
  for (auto v : inherited_free_vars(L, T)) {
    const Entry* e = L.lookup(v);
    if (!e || e->is_void()) return false;
  }
  return true;
}

inline bool is_closed(const Closure& c) { return is_closed_in(c.env, c.subject); }

// One s-step. Order: left component, right component, referred entry,
// dropped top entry.
inline std::vector<Closure> direct_subclosures(const Environment& L, const Term& T) {
  std::vector<Closure> out;
  if (T.is_binary()) {
    out.push_back({L, T.item()});
    if (T.is_pair())
      out.push_back({L.push(Entry::of_binder(T)), T.body()});
    else
      out.push_back({L, T.body()});
  }
  if (!L.empty()) {
    if (T.is_ref() && T.index() == 0 && L.top().is_pair()) out.push_back({L.pop(), L.top().term()});
    if (!occurs_free(T, 0)) out.push_back({L.pop(), lower(T, 0, 1)});
  }
  return out;
}

inline std::vector<Closure> direct_subclosures(const Closure& c) { return direct_subclosures(c.env, c.subject); }

inline bool is_neutral(const Term& T) { return !T.is_pair(); }

// Equality up to sort identifiers.
inline bool sort_irrelevant(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Sort:
      return true;
    case Kind::Ref:
      return a.index() == b.index();
    default:
      return sort_irrelevant(a.item(), b.item()) && sort_irrelevant(a.body(), b.body());
  }
}

// Same top constructor: both sorts, the same reference, both Pair or both Flat.
inline bool same_top_constructor(const Term& a, const Term& b) {
  if (a.is_sort() && b.is_sort()) return true;
  if (a.is_ref() && b.is_ref()) return a.index() == b.index();
  if (a.is_pair() && b.is_pair()) return true;
  return a.is_flat() && b.is_flat();
}

inline bool whnf_equivalent(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Sort:
    case Kind::Abst:
      return true;
    case Kind::Ref:
      return a.index() == b.index();
    case Kind::Abbr:
      return whnf_equivalent(a.body(), b.body());
    case Kind::Appl:
      return a.item() == b.item() && whnf_equivalent(a.body(), b.body());
    case Kind::Cast:
      return whnf_equivalent(a.item(), b.item()) && whnf_equivalent(a.body(), b.body());
  }
  return false;
}

enum class TermEq { Syntactic, SortIrrelevant };

// Compares the entries selected by f (indices relative to the top). Both
// selected entries must have the same kind and equal terms; unselected
// entries are not inspected.
inline bool env_eq_on(const VarSet& f, const Environment& L1, const Environment& L2, TermEq eq) {
  if (L1.size() != L2.size()) return false;
  for (auto i : f) {
    if (i >= L1.size()) break;
    const Entry& a = *L1.lookup(i);
    const Entry& b = *L2.lookup(i);
    if (a.kind() != b.kind()) return false;
    if (a.is_void()) continue;
    const bool same = eq == TermEq::Syntactic ? a.term() == b.term() : sort_irrelevant(a.term(), b.term());
    if (!same) return false;
  }
  return true;
}

inline bool req(const Term& T, const Environment& L1, const Environment& L2) {
  return env_eq_on(inherited_free_vars(L1, T), L1, L2, TermEq::Syntactic);
}

inline bool reqx(const Term& T, const Environment& L1, const Environment& L2) {
  return env_eq_on(inherited_free_vars(L1, T), L1, L2, TermEq::SortIrrelevant);
}

inline bool closure_sort_irrelevant(const Closure& c1, const Closure& c2) {
  return reqx(c1.subject, c1.env, c2.env) && sort_irrelevant(c1.subject, c2.subject);
}

}  // namespace ld
