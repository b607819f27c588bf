#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdadelta/arity.hpp"
#include "lambdadelta/environment.hpp"
#include "lambdadelta/errors.hpp"
#include "lambdadelta/normalization.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/term.hpp"

namespace ld {

// The set of bounds at which an application's function may be inspected.
class ApplicabilityDomain {
 public:
  enum class Variant { Omega, FinSet, Empty };

  static ApplicabilityDomain omega() { return ApplicabilityDomain(Variant::Omega, {}); }
  static ApplicabilityDomain empty() { return ApplicabilityDomain(Variant::Empty, {}); }
  static ApplicabilityDomain finite(std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) return empty();
    return ApplicabilityDomain(Variant::FinSet, std::move(members));
  }

  Variant variant() const noexcept { return variant_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  bool member(std::size_t n) const {
    switch (variant_) {
      case Variant::Omega: return true;
      case Variant::Empty: return false;
      case Variant::FinSet: return std::binary_search(members_.begin(), members_.end(), n);
    }
    return false;
  }
  // The least n in the domain with n >= n0.
  std::optional<std::size_t> least_geq(std::size_t n0) const {
    switch (variant_) {
      case Variant::Omega: return n0;
      case Variant::Empty: return std::nullopt;
      case Variant::FinSet: {
        auto it = std::lower_bound(members_.begin(), members_.end(), n0);
        if (it == members_.end()) return std::nullopt;
        return *it;
      }
    }
    return std::nullopt;
  }
  bool exists_geq(std::size_t n0) const { return least_geq(n0).has_value(); }

  std::string to_string() const {
    switch (variant_) {
      case Variant::Omega: return "omega";
      case Variant::Empty: return "empty";
      case Variant::FinSet: {
        std::string s = "set:";
        for (std::size_t k = 0; k < members_.size(); ++k) s += (k ? "," : "") + std::to_string(members_[k]);
        return s;
      }
    }
    return "?";
  }

  friend bool operator==(const ApplicabilityDomain&, const ApplicabilityDomain&) = default;

 private:
  ApplicabilityDomain(Variant v, std::vector<std::size_t> m) : variant_(v), members_(std::move(m)) {}

  Variant variant_;
  std::vector<std::size_t> members_;
};

// Every m in a has some n in b with m <= n.
inline bool domain_leq(const ApplicabilityDomain& a, const ApplicabilityDomain& b) {
  using V = ApplicabilityDomain::Variant;
  if (a.variant() == V::Empty) return true;
  if (b.variant() == V::Omega) return true;
  if (a.variant() == V::Omega || b.variant() == V::Empty) return false;
  return a.members().back() <= b.members().back();
}

// Common r-normal form of the n1-type of T1 and the n2-type of T2. Both
// terms must have an arity.
inline bool rt_convertible(const Environment& L, const Term& T1, BoundCount n1, const Term& T2, BoundCount n2,
                           std::size_t fuel, const SortPolicy& sp = {}) {
  if (!infer_arity(L, T1) || !infer_arity(L, T2)) throw NoArity("rt-conversion of a term without arity");
  return rt_normal_form(L, T1, n1, fuel, sp) == rt_normal_form(L, T2, n2, fuel, sp);
}

enum class FailureTag { NotClosed, CastMismatch, NoLambdaForm, BoundNotInDomain, ArgumentTypeMismatch, SubtermInvalid };

constexpr std::string_view failure_name(FailureTag t) {
  switch (t) {
    case FailureTag::NotClosed: return "not-closed";
    case FailureTag::CastMismatch: return "cast-mismatch";
    case FailureTag::NoLambdaForm: return "no-lambda-form";
    case FailureTag::BoundNotInDomain: return "bound-not-in-domain";
    case FailureTag::ArgumentTypeMismatch: return "argument-type-mismatch";
    case FailureTag::SubtermInvalid: return "subterm-invalid";
  }
  return "?";
}

// Position of a subterm or entry, outermost first: "l"/"r" for the left
// and right components, "entry k" for the entry a reference resolves to.
struct Failure {
  FailureTag tag;
  std::vector<std::string> path;
  FailureTag root_cause;
};

struct ValidityReport {
  bool valid = true;
  std::optional<Failure> failure;

  explicit operator bool() const noexcept { return valid; }
};

struct CheckOptions {
  std::size_t fuel = 0;  // 0 selects default_fuel per kernel call
  SortPolicy sorts{};
};

namespace detail {

inline std::size_t fuel_for(const CheckOptions& o, const Environment& L, const Term& T) {
  return o.fuel ? o.fuel : default_fuel(L, T);
}

inline ValidityReport fail(FailureTag t) { return {false, Failure{t, {}, t}}; }

inline ValidityReport wrap_sub(ValidityReport inner, std::string step) {
  if (inner.valid) return inner;
  Failure f = *inner.failure;
  f.path.insert(f.path.begin(), std::move(step));
  f.tag = FailureTag::SubtermInvalid;
  return {false, std::move(f)};
}

inline ValidityReport check(const ApplicabilityDomain& A, const Environment& L, const Term& T, const CheckOptions& o) {
  switch (T.kind()) {
    case Kind::Sort:
      return {};
    case Kind::Ref: {
      const Entry* e = L.lookup(T.index());
      if (!e || e->is_void()) return fail(FailureTag::NotClosed);
      return wrap_sub(check(A, L.prefix_of(T.index()), e->term(), o), "entry " + std::to_string(T.index()));
    }
    case Kind::Abst:
    case Kind::Abbr: {
      if (auto r = check(A, L, T.item(), o); !r) return wrap_sub(std::move(r), "l");
      return wrap_sub(check(A, L.push(Entry::of_binder(T)), T.body(), o), "r");
    }
    case Kind::Cast: {
      const Term& U = T.item();
      const Term& B = T.body();
      if (auto r = check(A, L, U, o); !r) return wrap_sub(std::move(r), "l");
      if (auto r = check(A, L, B, o); !r) return wrap_sub(std::move(r), "r");
      if (!rt_convertible(L, U, 0, B, 1, fuel_for(o, L, T), o.sorts)) return fail(FailureTag::CastMismatch);
      return {};
    }
    case Kind::Appl: {
      const Term& V = T.item();
      const Term& F = T.body();
      if (auto r = check(A, L, V, o); !r) return wrap_sub(std::move(r), "l");
      if (auto r = check(A, L, F, o); !r) return wrap_sub(std::move(r), "r");
      const std::size_t fuel = fuel_for(o, L, T);
      std::optional<WhnfResult> w;
      try {
        w = whnf_rt(L, F, fuel);
      } catch (const OpenHead&) {
        return fail(FailureTag::NoLambdaForm);
      } catch (const StuckApplication&) {
        return fail(FailureTag::NoLambdaForm);
      }
      if (!w->form.is_abst()) return fail(FailureTag::NoLambdaForm);
      if (!A.exists_geq(w->t_steps.value)) return fail(FailureTag::BoundNotInDomain);
      if (!rt_convertible(L, V, 1, w->form.item(), 0, fuel, o.sorts)) return fail(FailureTag::ArgumentTypeMismatch);
      return {};
    }
  }
  return {};
}

}  // namespace detail

// Decides validity of T in L. FuelExhausted is raised, never reported as
// invalid.
inline ValidityReport check_valid(const ApplicabilityDomain& A, const Environment& L, const Term& T,
                                  const CheckOptions& o = {}) {
  return detail::check(A, L, T, o);
}

inline bool typecheck(const ApplicabilityDomain& A, const Environment& L, const Term& T, const Term& U,
                      const CheckOptions& o = {}) {
  return check_valid(A, L, Term::cast(U, T), o).valid;
}

// The canonical inferred type of a valid term.
inline Term infer_type(const ApplicabilityDomain& A, const Environment& L, const Term& T, const CheckOptions& o = {}) {
  if (!check_valid(A, L, T, o)) throw InvalidTerm("type inference on an invalid term");
  return canonical_type(L, T, 1, detail::fuel_for(o, L, T), o.sorts);
}

inline bool iterated_typecheck(const ApplicabilityDomain& A, BoundCount n, const Environment& L, const Term& T,
                               const Term& U, const CheckOptions& o = {}) {
  if (!check_valid(A, L, T, o) || !check_valid(A, L, U, o)) return false;
  const std::size_t fuel = std::max(detail::fuel_for(o, L, T), detail::fuel_for(o, L, U));
  return rt_convertible(L, T, n, U, 0, fuel, o.sorts);
}

}  // namespace ld
