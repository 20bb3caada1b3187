#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "laa/grading.hpp"

namespace laa {

/// Symbolic generator name with an optional half-integer index (stored
/// doubled). Two generators are equal iff their ids are equal.
struct GenId {
  std::string name;
  std::optional<long long> index2; // twice the index, when present

  GenId() = default;
  GenId(std::string n) : name(std::move(n)) {}
  GenId(std::string n, Weight idx) : name(std::move(n)), index2(idx.twice()) {}

  bool has_index() const { return index2.has_value(); }
  Weight index() const { return Weight::of_twice(*index2); }

  std::string str() const {
    if (!index2) return name;
    return name + "_" + Weight::of_twice(*index2).str();
  }

  friend bool operator==(const GenId &a, const GenId &b) {
    return a.name == b.name && a.index2 == b.index2;
  }
  friend bool operator!=(const GenId &a, const GenId &b) { return !(a == b); }
  friend bool operator<(const GenId &a, const GenId &b) {
    if (a.name != b.name) return a.name < b.name;
    return a.index2.value_or(0) < b.index2.value_or(0);
  }
  friend std::ostream &operator<<(std::ostream &os, const GenId &g) {
    return os << g.str();
  }
};

/// A named generator carrying a parity and a weight.
struct Generator {
  GenId id;
  Parity parity;
  Weight weight;

  friend bool operator==(const Generator &a, const Generator &b) {
    return a.id == b.id && a.parity == b.parity && a.weight == b.weight;
  }
};

/// Canonical generator order used everywhere reports or bases must be
/// reproducible: evens before odds, then by name, then by index.
inline bool generator_order(const Generator &a, const Generator &b) {
  if (a.parity != b.parity) return a.parity.is_even();
  if (a.id.name != b.id.name) return a.id.name < b.id.name;
  return a.id.index2.value_or(0) < b.id.index2.value_or(0);
}

} // namespace laa
