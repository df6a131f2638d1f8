#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bss {

/// Finite ordered collection of distinct object identifiers. The order fixed
/// at construction is the row order of every table built over it.
class Universe {
 public:
  Universe() = default;
  /// Throws DuplicateIdentifier when two identifiers coincide.
  explicit Universe(std::vector<std::string> ids);
  Universe(std::initializer_list<std::string> ids)
      : Universe(std::vector<std::string>(ids)) {}

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  std::optional<std::size_t> find(const std::string& id) const;
  /// Throws ParseError naming the identifier when absent.
  std::size_t index_of(const std::string& id) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> ids) {
  return std::make_shared<const Universe>(std::move(ids));
}

/// Same universe by value; pointer identity short-circuits.
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A subset of U, stored as a membership bit-vector in universe order.
class ObjectSet {
 public:
  ObjectSet() = default;
  explicit ObjectSet(std::size_t universe_size) : bits_(universe_size) {}

  static ObjectSet empty_of(std::size_t n) { return ObjectSet(n); }
  static ObjectSet full_of(std::size_t n) {
    ObjectSet s(n);
    s.bits_.set();
    return s;
  }
  static ObjectSet of(std::size_t n, std::initializer_list<std::size_t> members);
  static ObjectSet of(std::size_t n, std::span<const std::size_t> members);
  /// Members named by identifier; unknown identifiers raise ParseError.
  static ObjectSet named(const Universe& u, std::span<const std::string> ids);
  static ObjectSet named(const Universe& u, std::initializer_list<std::string> ids);

  std::size_t universe_size() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool none() const noexcept { return bits_.none(); }
  bool all() const noexcept { return bits_.all(); }
  bool contains(std::size_t i) const { return bits_.test(i); }

  ObjectSet& insert(std::size_t i) {
    bits_.set(i);
    return *this;
  }
  ObjectSet& erase(std::size_t i) {
    bits_.reset(i);
    return *this;
  }

  bool is_subset_of(const ObjectSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ObjectSet& other) const {
    return bits_.intersects(other.bits_);
  }

  /// Complement relative to U.
  ObjectSet operator~() const {
    ObjectSet r;
    r.bits_ = ~bits_;
    return r;
  }
  ObjectSet& operator|=(const ObjectSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ObjectSet& operator&=(const ObjectSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ObjectSet& operator-=(const ObjectSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ObjectSet operator|(ObjectSet a, const ObjectSet& b) { return a |= b; }
  friend ObjectSet operator&(ObjectSet a, const ObjectSet& b) { return a &= b; }
  friend ObjectSet operator-(ObjectSet a, const ObjectSet& b) { return a -= b; }
  friend bool operator==(const ObjectSet& a, const ObjectSet& b) {
    return a.bits_ == b.bits_;
  }

  /// Indices of members in ascending order.
  std::vector<std::size_t> members() const;
  /// Member identifiers in universe order.
  std::vector<std::string> names(const Universe& u) const;
  /// "{h1,h3}" style rendering.
  std::string to_string(const Universe& u) const;

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace bss
