#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace relcat {

/// A finite Heyting algebra: bounded distributive lattice with the relative
/// pseudo-complement. This is the truth-value carrier of every relation; all
/// operation tables are precomputed at construction and validated against the
/// defining universal properties, so downstream code only does table lookups.
///
/// Elements are opaque string identifiers; internal indices follow input
/// order. Values are immutable after construction and safe to share.
class HeytingAlgebra {
public:
  /// Builds the algebra whose order is the reflexive-transitive closure of
  /// `cover` (pairs (x,y) meaning x is below y). meet/join are found by
  /// exhaustive scan and impl(x,y) is the join of all z with z meet x <= y.
  /// Throws NotALattice, NotDistributive, DuplicateElement, UnknownElement.
  static HeytingAlgebra fromOrder(const std::vector<std::string>& elements,
                                  const std::vector<std::pair<std::string, std::string>>& cover);

  /// Linear order on n elements labeled "0".."n-1". Throws InvalidSize for n < 1.
  static HeytingAlgebra chain(int n);

  /// The two-element Boolean algebra, chain(2).
  static HeytingAlgebra boolean() { return chain(2); }

  /// Componentwise order and operations on the Cartesian product of carriers.
  /// Element names are dot-joined component names.
  static HeytingAlgebra product(const HeytingAlgebra& a, const HeytingAlgebra& b);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named element; throws UnknownElement.
  int index(std::string_view name) const;
  /// Index of a named element, or -1.
  int tryIndex(std::string_view name) const noexcept;

  bool leq(int x, int y) const { return leq_[x * size() + y]; }
  int meet(int x, int y) const { return meet_[x * size() + y]; }
  int join(int x, int y) const { return join_[x * size() + y]; }
  int impl(int x, int y) const { return impl_[x * size() + y]; }
  int neg(int x) const { return impl(x, bot_); }
  int bot() const { return bot_; }
  int top() const { return top_; }

  bool operator==(const HeytingAlgebra& other) const;
  bool operator!=(const HeytingAlgebra& other) const { return !(*this == other); }

private:
  HeytingAlgebra() = default;

  // Derives meet/join/impl/bot/top from names_ + leq_ and validates every
  // invariant (partial order, lattice, bounds, distributivity, residuation).
  void completeFromOrder();

  std::vector<std::string> names_;
  std::vector<char> leq_;   // size*size, row-major
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> impl_;
  int bot_ = -1;
  int top_ = -1;
};

using AlgebraPtr = std::shared_ptr<const HeytingAlgebra>;

/// Parses a lattice builder shorthand: "chain:n", "bool", "prod(a,b)" with
/// nested builders. Throws SyntaxError / InvalidSize.
HeytingAlgebra parseLatticeBuilder(std::string_view text);

}  // namespace relcat
