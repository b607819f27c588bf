#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>

namespace ld {

using SortId = std::uint64_t;

// The sort successor function. Sorts absent from the table map to s + 1.
class SortPolicy {
 public:
  SortPolicy() = default;
  explicit SortPolicy(std::map<SortId, SortId> table) : table_(std::move(table)) {}

  static SortPolicy successor() { return {}; }

  SortId next(SortId s) const {
    if (auto it = table_.find(s); it != table_.end()) return it->second;
    return s + 1;
  }
  const std::map<SortId, SortId>& table() const noexcept { return table_; }

 private:
  std::map<SortId, SortId> table_;
};

// Number of type-inference steps, with truncated subtraction.
struct BoundCount {
  std::size_t value = 0;

  constexpr BoundCount() = default;
  constexpr BoundCount(std::size_t v) : value(v) {}  // NOLINT(google-explicit-constructor)

  friend constexpr BoundCount operator+(BoundCount a, BoundCount b) { return {a.value + b.value}; }
  friend constexpr BoundCount operator-(BoundCount a, BoundCount b) {
    return {a.value > b.value ? a.value - b.value : 0};
  }
  friend constexpr auto operator<=>(BoundCount, BoundCount) = default;
};

enum class Kind : std::uint8_t { Sort, Ref, Appl, Abst, Abbr, Cast };

// Immutable term with de Bruijn depth indices. Copies share structure.
//
//   Appl(arg, fun)    written @(arg).fun
//   Abst(type, body)  written [x:type].body
//   Abbr(defn, body)  written [x=defn].body
//   Cast(type, body)  written <type>.body
//
// For the four binary constructors item() is the left component (arg,
// type, defn) and body() the right one.
class Term {
 public:
  static Term sort(SortId s) { return Term(make_leaf(Kind::Sort, s)); }
  static Term ref(std::size_t i) { return Term(make_leaf(Kind::Ref, i)); }
  static Term appl(Term arg, Term fun) { return binary(Kind::Appl, std::move(arg), std::move(fun)); }
  static Term abst(Term type, Term body) { return binary(Kind::Abst, std::move(type), std::move(body)); }
  static Term abbr(Term defn, Term body) { return binary(Kind::Abbr, std::move(defn), std::move(body)); }
  static Term cast(Term type, Term body) { return binary(Kind::Cast, std::move(type), std::move(body)); }
  static Term binary(Kind k, Term item, Term body) {
    assert(k != Kind::Sort && k != Kind::Ref);
    return Term(make_binary(k, std::move(item), std::move(body)));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is_sort() const noexcept { return kind() == Kind::Sort; }
  bool is_ref() const noexcept { return kind() == Kind::Ref; }
  bool is_appl() const noexcept { return kind() == Kind::Appl; }
  bool is_abst() const noexcept { return kind() == Kind::Abst; }
  bool is_abbr() const noexcept { return kind() == Kind::Abbr; }
  bool is_cast() const noexcept { return kind() == Kind::Cast; }
  bool is_pair() const noexcept { return is_abst() || is_abbr(); }
  bool is_flat() const noexcept { return is_appl() || is_cast(); }
  bool is_binary() const noexcept { return !is_sort() && !is_ref(); }

  SortId sort_id() const noexcept {
    assert(is_sort());
    return node_->value;
  }
  std::size_t index() const noexcept {
    assert(is_ref());
    return static_cast<std::size_t>(node_->value);
  }
  const Term& item() const noexcept {
    assert(is_binary());
    return *node_->item;
  }
  const Term& body() const noexcept {
    assert(is_binary());
    return *node_->body;
  }

  // Number of constructors.
  std::size_t size() const noexcept { return node_->size; }
  // Every free index of the term is strictly below this value.
  std::size_t open_bound() const noexcept { return node_->open_bound; }
  std::size_t hash() const noexcept { return node_->hash; }

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
    if (!a.is_binary()) return a.node_->value == b.node_->value;
    return a.item() == b.item() && a.body() == b.body();
  }

  // Total structural order (kind, payload, left, right); used for sets.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (!a.is_binary()) return a.node_->value <=> b.node_->value;
    if (auto c = a.item() <=> b.item(); c != 0) return c;
    return a.body() <=> b.body();
  }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  struct Node {
    Kind kind;
    std::uint64_t value;
    std::unique_ptr<const Term> item;
    std::unique_ptr<const Term> body;
    std::size_t size;
    std::size_t open_bound;
    std::size_t hash;
  };

  static std::shared_ptr<const Node> make_leaf(Kind k, std::uint64_t value) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->value = value;
    n->size = 1;
    n->open_bound = k == Kind::Ref ? static_cast<std::size_t>(value) + 1 : 0;
    n->hash = std::hash<std::uint64_t>{}(value) * 31u + static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ull;
    return n;
  }

  static std::shared_ptr<const Node> make_binary(Kind k, Term item, Term body) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->value = 0;
    n->size = 1 + item.size() + body.size();
    // The body of a pair sits under one binder.
    std::size_t body_open = body.open_bound();
    if (k == Kind::Abst || k == Kind::Abbr) body_open = body_open > 0 ? body_open - 1 : 0;
    n->open_bound = std::max(item.open_bound(), body_open);
    std::size_t h = static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ull;
    h ^= item.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= body.hash() + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
    n->hash = h;
    n->item = std::make_unique<const Term>(std::move(item));
    n->body = std::make_unique<const Term>(std::move(body));
    return n;
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace ld

template <>
struct std::hash<ld::Term> {
  std::size_t operator()(const ld::Term& t) const noexcept { return t.hash(); }
};
