#pragma once

#include <cstddef>
#include <vector>

#include "lambdadelta/debruijn.hpp"
#include "lambdadelta/environment.hpp"
#include "lambdadelta/errors.hpp"
#include "lambdadelta/normalization.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

// One parallel pass expanding every declared variable whose type reduces
// to an abstraction [y:W].U into [y:W].@(y).x. fuel bounds each whnf
// computation on a declared type; 0 selects default_fuel.
inline Term eta_expand_term(const Environment& L, const Term& T, std::size_t fuel = 0) {
  switch (T.kind()) {
    case Kind::Sort:
      return T;
    case Kind::Ref: {
      const std::size_t i = T.index();
      const Entry* e = L.lookup(i);
      if (!e || !e->is_decl()) return T;
      const Environment K = L.prefix_of(i);
      WhnfResult w{0, e->term(), {}};
      try {
        w = whnf_rt(K, e->term(), fuel ? fuel : default_fuel(K, e->term()));
      } catch (const OpenHead&) {
        return T;
      } catch (const StuckApplication&) {
        return T;
      }
      if (!w.form.is_abst()) return T;
      return Term::abst(lift(w.form.item(), 0, i + 1), Term::appl(Term::ref(0), Term::ref(i + 1)));
    }
    case Kind::Abst:
    case Kind::Abbr:
      return Term::binary(T.kind(), eta_expand_term(L, T.item(), fuel),
                          eta_expand_term(L.push(Entry::of_binder(T)), T.body(), fuel));
    case Kind::Appl:
    case Kind::Cast:
      return Term::binary(T.kind(), eta_expand_term(L, T.item(), fuel), eta_expand_term(L, T.body(), fuel));
  }
  return T;
}

// Expands the selected entries, each in its own prefix.
inline Environment eta_expand_env(const VarSet& f, const Environment& L, std::size_t fuel = 0) {
  const auto entries = L.entries();
  Environment out;
  for (std::size_t pos = 0; pos < entries.size(); ++pos) {
    const std::size_t i = entries.size() - 1 - pos;
    const Entry& e = entries[pos];
    if (e.is_void() || !f.contains(i))
      out = out.push(e);
    else
      out = out.push(e.with_term(eta_expand_term(L.prefix_of(i), e.term(), fuel)));
  }
  return out;
}

inline Closure eta_expand_closure(const Closure& c, std::size_t fuel = 0) {
  return {eta_expand_env(inherited_free_vars(c.env, c.subject), c.env, fuel), eta_expand_term(c.env, c.subject, fuel)};
}

}  // namespace ld
