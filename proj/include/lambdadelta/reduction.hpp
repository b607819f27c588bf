#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdadelta/debruijn.hpp"
#include "lambdadelta/environment.hpp"
#include "lambdadelta/errors.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

enum class Rule : std::uint8_t { Beta, Delta, Zeta, Theta, Epsilon, Sort, Lambda, Extract, Hash, CastBoth };

enum class Context : std::uint8_t { ApplLeft, ApplRight, PairLeft, PairRight, CastLeft, CastRight };

constexpr std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Beta: return "beta";
    case Rule::Delta: return "delta";
    case Rule::Zeta: return "zeta";
    case Rule::Theta: return "theta";
    case Rule::Epsilon: return "epsilon";
    case Rule::Sort: return "s";
    case Rule::Lambda: return "l";
    case Rule::Extract: return "e";
    case Rule::Hash: return "#";
    case Rule::CastBoth: return "cast-b";
  }
  return "?";
}

constexpr std::string_view context_name(Context c) {
  switch (c) {
    case Context::ApplLeft: return "@l";
    case Context::ApplRight: return "@r";
    case Context::PairLeft: return "Pl";
    case Context::PairRight: return "Pr";
    case Context::CastLeft: return "<>l";
    case Context::CastRight: return "<>r";
  }
  return "?";
}

// One step: rule is applied at the position reached by path (outermost
// context first).
struct RtStep {
  BoundCount bound;
  Term result;
  Rule rule;
  std::vector<Context> path;
};

namespace detail {

enum class Relation { RT, T, X };

inline bool has(const std::vector<RtStep>& v, std::size_t bound, const Term& t) {
  for (const auto& s : v)
    if (s.bound.value == bound && s.result == t) return true;
  return false;
}

inline void emit(std::vector<RtStep>& out, RtStep s) {
  if (!has(out, s.bound.value, s.result)) out.push_back(std::move(s));
}

inline void wrap(std::vector<RtStep>& out, const std::vector<RtStep>& inner, Context c, bool zero_only,
                 const auto& rebuild) {
  for (const auto& s : inner) {
    if (zero_only && s.bound.value != 0) continue;
    std::vector<Context> path;
    path.reserve(s.path.size() + 1);
    path.push_back(c);
    path.insert(path.end(), s.path.begin(), s.path.end());
    emit(out, {s.bound, rebuild(s.result), s.rule, std::move(path)});
  }
}

// In X mode every step carries bound 0; bounds are meaningless there.
inline std::vector<RtStep> collect(const Environment& L, const Term& T, Relation rel, const SortPolicy& sp) {
  const bool r_rules = rel != Relation::T;
  const bool x = rel == Relation::X;
  const bool bounded = !x;
  const std::size_t one = x ? 0 : 1;
  std::vector<RtStep> out;
  switch (T.kind()) {
    case Kind::Sort:
      emit(out, {one, Term::sort(sp.next(T.sort_id())), Rule::Sort, {}});
      break;
    case Kind::Ref: {
      const std::size_t i = T.index();
      const Entry* e = L.lookup(i);
      if (!e || e->is_void()) break;
      Term unfolded = lift(e->term(), 0, i + 1);
      if (x)
        emit(out, {0, std::move(unfolded), Rule::Hash, {}});
      else if (e->is_defn())
        emit(out, {0, std::move(unfolded), Rule::Delta, {}});
      else
        emit(out, {1, std::move(unfolded), Rule::Lambda, {}});
      break;
    }
    case Kind::Appl: {
      const Term& V = T.item();
      const Term& F = T.body();
      if (r_rules) {
        if (F.is_abst()) emit(out, {0, Term::abbr(Term::cast(F.item(), V), F.body()), Rule::Beta, {}});
        if (F.is_abbr())
          emit(out, {0, Term::abbr(F.item(), Term::appl(lift(V, 0, 1), F.body())), Rule::Theta, {}});
      }
      wrap(out, collect(L, V, rel, sp), Context::ApplLeft, bounded,
           [&](const Term& r) { return Term::appl(r, F); });
      wrap(out, collect(L, F, rel, sp), Context::ApplRight, false,
           [&](const Term& r) { return Term::appl(V, r); });
      break;
    }
    case Kind::Abst:
    case Kind::Abbr: {
      const Term& V = T.item();
      const Term& B = T.body();
      if (T.is_abbr() && r_rules && !occurs_free(B, 0)) emit(out, {0, lower(B, 0, 1), Rule::Zeta, {}});
      const Kind k = T.kind();
      wrap(out, collect(L, V, rel, sp), Context::PairLeft, bounded,
           [&](const Term& r) { return Term::binary(k, r, B); });
      wrap(out, collect(L.push(Entry::of_binder(T)), B, rel, sp), Context::PairRight, false,
           [&](const Term& r) { return Term::binary(k, V, r); });
      break;
    }
    case Kind::Cast: {
      const Term& U = T.item();
      const Term& B = T.body();
      if (r_rules) emit(out, {0, B, Rule::Epsilon, {}});
      emit(out, {one, U, Rule::Extract, {}});
      auto us = collect(L, U, rel, sp);
      auto bs = collect(L, B, rel, sp);
      wrap(out, us, Context::CastLeft, bounded, [&](const Term& r) { return Term::cast(r, B); });
      wrap(out, bs, Context::CastRight, bounded, [&](const Term& r) { return Term::cast(U, r); });
      if (bounded) {
        for (const auto& u : us) {
          if (u.bound.value != 1) continue;
          for (const auto& b : bs)
            if (b.bound.value == 1) emit(out, {1, Term::cast(u.result, b.result), Rule::CastBoth, {}});
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

// All single bound rt-steps from T in L, without duplicates. Head rules
// come first, then steps in the left component, then in the right one.
inline std::vector<RtStep> step_rt(const Environment& L, const Term& T, const SortPolicy& sp = {}) {
  return detail::collect(L, T, detail::Relation::RT, sp);
}

// All single bound t-steps (t-rules and delta with their context rules).
inline std::vector<RtStep> step_t(const Environment& L, const Term& T, const SortPolicy& sp = {}) {
  return detail::collect(L, T, detail::Relation::T, sp);
}

// All single extended rt-steps. The sort rule yields next(s) only.
inline std::vector<Term> step_x(const Environment& L, const Term& T, const SortPolicy& sp = {}) {
  std::vector<Term> out;
  for (auto& s : detail::collect(L, T, detail::Relation::X, sp)) out.push_back(std::move(s.result));
  return out;
}

namespace detail {

template <typename Steps>
std::vector<Environment> step_env(const Environment& L, const Steps& steps) {
  std::vector<Environment> out;
  const auto entries = L.entries();
  for (std::size_t pos = 0; pos < entries.size(); ++pos) {
    if (entries[pos].is_void()) continue;
    const std::size_t i = entries.size() - 1 - pos;
    const Environment prefix = L.prefix_of(i);
    for (const Term& t : steps(prefix, entries[pos].term())) {
      Environment rebuilt = prefix.push(entries[pos].with_term(t));
      for (std::size_t k = pos + 1; k < entries.size(); ++k) rebuilt = rebuilt.push(entries[k]);
      out.push_back(std::move(rebuilt));
    }
  }
  return out;
}

}  // namespace detail

// One 0-bound step inside exactly one entry, outermost entry first.
inline std::vector<Environment> step_env_r(const Environment& L, const SortPolicy& sp = {}) {
  return detail::step_env(L, [&](const Environment& K, const Term& V) {
    std::vector<Term> out;
    for (auto& s : step_rt(K, V, sp))
      if (s.bound.value == 0) out.push_back(std::move(s.result));
    return out;
  });
}

// One extended step inside exactly one entry, outermost entry first.
inline std::vector<Environment> step_env_x(const Environment& L, const SortPolicy& sp = {}) {
  return detail::step_env(L, [&](const Environment& K, const Term& V) { return step_x(K, V, sp); });
}

namespace detail {

inline void spend(std::size_t& used, std::size_t fuel) {
  if (++used > fuel) throw FuelExhausted(fuel);
}

// One level of the preferred t-strategy: descend through application
// functions and binder bodies, unfold definitions, then take the t-step.
inline Term type_step(const Environment& L, const Term& T, const SortPolicy& sp, std::size_t& used,
                      std::size_t fuel) {
  spend(used, fuel);
  switch (T.kind()) {
    case Kind::Sort:
      return Term::sort(sp.next(T.sort_id()));
    case Kind::Ref: {
      const Entry* e = L.lookup(T.index());
      if (!e || e->is_void()) throw NoTypeStep("no type step for an unbound reference");
      Term unfolded = lift(e->term(), 0, T.index() + 1);
      if (e->is_decl()) return unfolded;
      return type_step(L, unfolded, sp, used, fuel);
    }
    case Kind::Abst:
    case Kind::Abbr:
      return Term::binary(T.kind(), T.item(), type_step(L.push(Entry::of_binder(T)), T.body(), sp, used, fuel));
    case Kind::Appl:
      return Term::appl(T.item(), type_step(L, T.body(), sp, used, fuel));
    case Kind::Cast:
      return T.item();
  }
  throw NoTypeStep("unreachable");
}

}  // namespace detail

// Deterministic representative of the n-iterated inferred type of T.
inline Term canonical_type(const Environment& L, const Term& T, BoundCount n, std::size_t fuel,
                           const SortPolicy& sp = {}) {
  std::size_t used = 0;
  Term cur = T;
  for (std::size_t k = 0; k < n.value; ++k) cur = detail::type_step(L, cur, sp, used, fuel);
  return cur;
}

// A random bound-n t-reduction: each move is a random step_t step whose
// bound fits in what remains. Bound-0 moves are interleaved at random.
template <typename Rng>
Term sample_t_reduct(const Environment& L, const Term& T, BoundCount n, Rng& rng, std::size_t fuel,
                     const SortPolicy& sp = {}) {
  Term cur = T;
  std::size_t left = n.value;
  for (std::size_t used = 0;; ++used) {
    if (used > fuel) throw FuelExhausted(fuel);
    std::vector<RtStep> options;
    for (auto& s : step_t(L, cur, sp))
      if (s.bound.value <= left) options.push_back(std::move(s));
    if (left == 0 && (options.empty() || std::bernoulli_distribution(0.5)(rng))) return cur;
    if (options.empty()) throw NoTypeStep("no t-step available");
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    RtStep& s = options[pick(rng)];
    left -= s.bound.value;
    cur = std::move(s.result);
  }
}

// Every (n, T') reachable from T by at most max_depth single steps.
inline std::set<std::pair<std::size_t, Term>> reachable_rt(const Environment& L, const Term& T, std::size_t max_depth,
                                                            const SortPolicy& sp = {},
                                                            std::size_t max_bound = SIZE_MAX) {
  std::set<std::pair<std::size_t, Term>> seen{{0, T}};
  std::vector<std::pair<std::size_t, Term>> frontier{{0, T}};
  for (std::size_t d = 0; d < max_depth && !frontier.empty(); ++d) {
    std::vector<std::pair<std::size_t, Term>> next;
    for (const auto& [n, t] : frontier)
      for (auto& s : step_rt(L, t, sp)) {
        const std::size_t m = n + s.bound.value;
        if (m > max_bound) continue;
        if (seen.emplace(m, s.result).second) next.emplace_back(m, std::move(s.result));
      }
    frontier = std::move(next);
  }
  return seen;
}

enum class QrstKind : std::uint8_t { Ex, Lx, Lq, Cs };

constexpr std::string_view qrst_name(QrstKind k) {
  switch (k) {
    case QrstKind::Ex: return "ex";
    case QrstKind::Lx: return "lx";
    case QrstKind::Lq: return "lq";
    case QrstKind::Cs: return "cs";
  }
  return "?";
}

struct QrstStep {
  QrstKind kind;
  Closure target;
};

// One qrst-step. The lq family is represented by the closure itself.
inline std::vector<QrstStep> qrst_steps(const Closure& c, const SortPolicy& sp = {}) {
  std::vector<QrstStep> out;
  for (auto& t : step_x(c.env, c.subject, sp)) out.push_back({QrstKind::Ex, {c.env, std::move(t)}});
  for (auto& e : step_env_x(c.env, sp)) out.push_back({QrstKind::Lx, {std::move(e), c.subject}});
  out.push_back({QrstKind::Lq, c});
  for (auto& s : direct_subclosures(c)) out.push_back({QrstKind::Cs, std::move(s)});
  return out;
}

}  // namespace ld
