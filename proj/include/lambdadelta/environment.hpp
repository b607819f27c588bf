#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lambdadelta/term.hpp"

namespace ld {

enum class EntryKind : std::uint8_t { Decl, Defn, Void };

// Decl(type), Defn(body) or Void. A Void entry occupies a binder position
// without binding anything.
class Entry {
 public:
  static Entry decl(Term type) { return Entry(EntryKind::Decl, std::move(type)); }
  static Entry defn(Term body) { return Entry(EntryKind::Defn, std::move(body)); }
  static Entry excluded() { return Entry(EntryKind::Void, std::nullopt); }
  // The entry a Pair binder pushes: Decl for Abst, Defn for Abbr.
  static Entry of_binder(const Term& pair) {
    assert(pair.is_pair());
    return pair.is_abst() ? decl(pair.item()) : defn(pair.item());
  }

  EntryKind kind() const noexcept { return kind_; }
  bool is_decl() const noexcept { return kind_ == EntryKind::Decl; }
  bool is_defn() const noexcept { return kind_ == EntryKind::Defn; }
  bool is_void() const noexcept { return kind_ == EntryKind::Void; }
  bool is_pair() const noexcept { return !is_void(); }

  const Term& term() const noexcept {
    assert(term_.has_value());
    return *term_;
  }
  Entry with_term(Term t) const {
    assert(!is_void());
    return Entry(kind_, std::move(t));
  }
  std::size_t size() const noexcept { return term_ ? term_->size() : 0; }

  friend bool operator==(const Entry&, const Entry&) = default;

 private:
  Entry(EntryKind k, std::optional<Term> t) : kind_(k), term_(std::move(t)) {}

  EntryKind kind_;
  std::optional<Term> term_;
};

// Persistent list of entries. The innermost entry is the last one and is
// the one Ref 0 refers to. Extending an environment shares its prefix.
class Environment {
 public:
  Environment() = default;
  explicit Environment(const std::vector<Entry>& outermost_first) {
    for (const auto& e : outermost_first) *this = push(e);
  }

  Environment push(Entry e) const {
    Environment out;
    out.top_ = std::make_shared<const Node>(Node{std::move(e), top_, size() + 1});
    return out;
  }

  std::size_t size() const noexcept { return top_ ? top_->len : 0; }
  bool empty() const noexcept { return !top_; }

  // The entry Ref i refers to, or nullptr when i escapes.
  const Entry* lookup(std::size_t i) const noexcept {
    const Node* n = top_.get();
    for (; n && i > 0; --i) n = n->rest.get();
    return n ? &n->entry : nullptr;
  }
  // The environment in which the entry of Ref i lives. Precondition: i < size().
  Environment prefix_of(std::size_t i) const {
    assert(i < size());
    const Node* n = top_.get();
    for (; i > 0; --i) n = n->rest.get();
    return Environment(n->rest);
  }
  const Entry& top() const noexcept {
    assert(top_);
    return top_->entry;
  }
  Environment pop() const {
    assert(top_);
    return Environment(top_->rest);
  }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(size());
    for (const Node* n = top_.get(); n; n = n->rest.get()) out.push_back(n->entry);
    return {out.rbegin(), out.rend()};
  }

  // Constructor count of the entries: the term of each binding, one per exclusion.
  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (const Node* n = top_.get(); n; n = n->rest.get()) w += n->entry.is_void() ? 1 : n->entry.size();
    return w;
  }

  friend bool operator==(const Environment& a, const Environment& b) {
    const Node* x = a.top_.get();
    const Node* y = b.top_.get();
    for (; x && y; x = x->rest.get(), y = y->rest.get()) {
      if (x == y) return true;
      if (!(x->entry == y->entry)) return false;
    }
    return x == y;
  }

 private:
  struct Node {
    Entry entry;
    std::shared_ptr<const Node> rest;
    std::size_t len;
  };
  explicit Environment(std::shared_ptr<const Node> n) : top_(std::move(n)) {}

  std::shared_ptr<const Node> top_;
};

struct Closure {
  Environment env;
  Term subject;

  // Total constructor count of subject and entries.
  std::size_t size() const noexcept { return subject.size() + env.weight(); }

  friend bool operator==(const Closure&, const Closure&) = default;
};

}  // namespace ld
