#pragma once

#include "vsft/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vsft {

/// Sparse exponent vector x^e over an ambient dimension. Zero entries are never
/// stored. Ordering is graded lexicographic (total degree, then the earlier
/// axis dominates), which gives every container of monomials a canonical order.
class ExponentVector {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : dim_(dim) {}
  static ExponentVector from_dense(std::span<const Rational> values);
  static ExponentVector unit(std::size_t dim, std::size_t axis, Rational value = 1);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  Rational operator[](std::size_t axis) const;
  void set(std::size_t axis, Rational value);
  std::vector<Rational> dense() const;
  Rational total_degree() const;
  bool has_negative_entry() const;

  /// Same entries in a larger ambient space.
  ExponentVector embedded(std::size_t new_dim) const;

  ExponentVector operator-() const;
  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

  /// "(1, 3/2, 0)"
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

ExponentVector monoid_add(const ExponentVector& a, const ExponentVector& b);
ExponentVector scalar_multiple(const ExponentVector& e, std::int64_t k);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Node cap for a single membership query.
/// Per-thread tally of search work since the last reset. Reports use it to
/// record the budget a check consumed.
struct WorkCounters {
  std::uint64_t search_nodes = 0;
  std::uint64_t products = 0;
};
WorkCounters& work_counters() noexcept;

struct SearchBudget {
  std::uint64_t max_nodes = 4'000'000;
};

/// Multiplicities of generators (by their index in the presentation) whose sum
/// is the target. Empty map is the zero vector.
struct MonoidMembershipWitness {
  std::map<std::size_t, std::uint64_t> multiplicities;
  friend bool operator==(const MonoidMembershipWitness&, const MonoidMembershipWitness&) = default;
};

/// Finitely generated submonoid S of Q^d together with a grading functional
/// that is strictly positive on every generator. Immutable; cheap to copy.
class MonoidPresentation {
 public:
  MonoidPresentation() = default;
  /// Throws PreconditionViolated if a generator has nonpositive grade, two
  /// generators coincide, or dimensions disagree.
  MonoidPresentation(std::size_t dim, std::vector<ExponentVector> generators,
                     std::vector<Rational> grading);

  std::size_t dim() const noexcept;
  const std::vector<ExponentVector>& generators() const noexcept;
  const std::vector<Rational>& grading() const noexcept;
  /// Least common denominator of all generator entries.
  std::int64_t denominator_bound() const noexcept;

  Rational degree(const ExponentVector& e) const;

  /// Same monoid with one extra free axis (generator e_new, grade 1).
  MonoidPresentation with_free_axis() const;

  /// Witness iff target is in S. Exhaustive memoized depth-first search over
  /// multiplicity vectors, generators taken in decreasing grade; the returned
  /// witness is the lexicographically least multiplicity vector in that order.
  /// Throws BudgetExceeded when the node cap is hit.
  std::optional<MonoidMembershipWitness> member(const ExponentVector& target,
                                                const SearchBudget& budget = {}) const;
  /// Same answer as member(); rank-1 monoids answer from a cached
  /// reachability table instead of searching.
  bool contains(const ExponentVector& target, const SearchBudget& budget = {}) const;

  ExponentVector evaluate(const MonoidMembershipWitness& w) const;

  friend bool operator==(const MonoidPresentation& a, const MonoidPresentation& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

inline std::optional<MonoidMembershipWitness> monoid_member(const MonoidPresentation& s,
                                                            const ExponentVector& target,
                                                            const SearchBudget& budget = {}) {
  return s.member(target, budget);
}

/// "x1^2*y/x3", or "1" for the zero vector. Rational exponents are parenthesised.
std::string render_monomial(const ExponentVector& e, std::span<const std::string> axis_names);

}  // namespace vsft
