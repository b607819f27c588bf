#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "lambdadelta/debruijn.hpp"
#include "lambdadelta/environment.hpp"
#include "lambdadelta/errors.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

// 10 * (closure size)^2.
inline std::size_t default_fuel(const Environment& L, const Term& T) {
  const std::size_t s = Closure{L, T}.size();
  return 10 * s * s;
}

// The first 0-step in the order step_rt lists them.
inline std::optional<Term> first_r_step(const Environment& L, const Term& T) {
  switch (T.kind()) {
    case Kind::Sort:
      return std::nullopt;
    case Kind::Ref: {
      const Entry* e = L.lookup(T.index());
      if (e && e->is_defn()) return lift(e->term(), 0, T.index() + 1);
      return std::nullopt;
    }
    case Kind::Appl: {
      const Term& V = T.item();
      const Term& F = T.body();
      if (F.is_abst()) return Term::abbr(Term::cast(F.item(), V), F.body());
      if (F.is_abbr()) return Term::abbr(F.item(), Term::appl(lift(V, 0, 1), F.body()));
      if (auto v = first_r_step(L, V)) return Term::appl(std::move(*v), F);
      if (auto f = first_r_step(L, F)) return Term::appl(V, std::move(*f));
      return std::nullopt;
    }
    case Kind::Abst:
    case Kind::Abbr: {
      const Term& B = T.body();
      if (T.is_abbr() && !occurs_free(B, 0)) return lower(B, 0, 1);
      if (auto v = first_r_step(L, T.item())) return Term::binary(T.kind(), std::move(*v), B);
      if (auto b = first_r_step(L.push(Entry::of_binder(T)), B)) return Term::binary(T.kind(), T.item(), std::move(*b));
      return std::nullopt;
    }
    case Kind::Cast:
      return T.body();
  }
  return std::nullopt;
}

inline bool is_r_normal(const Environment& L, const Term& T) { return !first_r_step(L, T).has_value(); }

// Leftmost-outermost r-normalization. fuel bounds the number of steps.
inline Term r_normalize(const Environment& L, const Term& T, std::size_t fuel) {
  Term cur = T;
  for (std::size_t used = 0;; ++used) {
    auto next = first_r_step(L, cur);
    if (!next) return cur;
    if (used == fuel) throw FuelExhausted(fuel);
    cur = std::move(*next);
  }
}

// r-normalization choosing each 0-step uniformly among all available ones.
template <typename Rng>
Term r_normalize_random(const Environment& L, const Term& T, std::size_t fuel, Rng& rng) {
  Term cur = T;
  for (std::size_t used = 0;; ++used) {
    std::vector<Term> zero;
    for (auto& s : step_rt(L, cur))
      if (s.bound.value == 0) zero.push_back(std::move(s.result));
    if (zero.empty()) return cur;
    if (used == fuel) throw FuelExhausted(fuel);
    std::uniform_int_distribution<std::size_t> pick(0, zero.size() - 1);
    cur = std::move(zero[pick(rng)]);
  }
}

// The canonical n-iterated type followed by r-normalization.
inline Term rt_normal_form(const Environment& L, const Term& T, BoundCount n, std::size_t fuel,
                           const SortPolicy& sp = {}) {
  return r_normalize(L, canonical_type(L, T, n, fuel, sp), fuel);
}

struct WhnfStep {
  BoundCount bound;
  Rule rule;
  Term result;
};

struct WhnfResult {
  BoundCount t_steps;
  Term form;
  std::vector<WhnfStep> trace;
};

namespace detail {

// One head step toward a weak head rt-normal form, or nullopt if T is a
// sort or an abstraction.
inline std::optional<WhnfStep> head_step(const Environment& L, const Term& T) {
  switch (T.kind()) {
    case Kind::Sort:
    case Kind::Abst:
      return std::nullopt;
    case Kind::Ref: {
      const Entry* e = L.lookup(T.index());
      if (!e || e->is_void()) throw OpenHead("head variable is not bound by a declaration or definition");
      Term unfolded = lift(e->term(), 0, T.index() + 1);
      if (e->is_defn()) return WhnfStep{0, Rule::Delta, std::move(unfolded)};
      return WhnfStep{1, Rule::Lambda, std::move(unfolded)};
    }
    case Kind::Cast:
      return WhnfStep{0, Rule::Epsilon, T.body()};
    case Kind::Appl: {
      const Term& V = T.item();
      const Term& F = T.body();
      if (F.is_abst()) return WhnfStep{0, Rule::Beta, Term::abbr(Term::cast(F.item(), V), F.body())};
      if (F.is_abbr()) return WhnfStep{0, Rule::Theta, Term::abbr(F.item(), Term::appl(lift(V, 0, 1), F.body()))};
      if (F.is_sort()) throw StuckApplication("application of a sort");
      auto s = head_step(L, F);
      s->result = Term::appl(V, std::move(s->result));
      return s;
    }
    case Kind::Abbr: {
      const Term& V = T.item();
      const Term& B = T.body();
      if (!occurs_free(B, 0)) return WhnfStep{0, Rule::Zeta, lower(B, 0, 1)};
      if (auto s = head_step(L.push(Entry::defn(V)), B)) {
        s->result = Term::abbr(V, std::move(s->result));
        return s;
      }
      return WhnfStep{0, Rule::Delta, Term::abbr(V, *unfold_first(B, 0, V))};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Weak head rt-normal form with the least number of t-steps. The form is
// always a sort or an abstraction.
inline WhnfResult whnf_rt(const Environment& L, const Term& T, std::size_t fuel, bool keep_trace = false) {
  WhnfResult r{0, T, {}};
  for (std::size_t used = 0;; ++used) {
    auto s = detail::head_step(L, r.form);
    if (!s) return r;
    if (used == fuel) throw FuelExhausted(fuel);
    r.t_steps = r.t_steps + s->bound;
    r.form = s->result;
    if (keep_trace) r.trace.push_back(std::move(*s));
  }
}

}  // namespace ld
