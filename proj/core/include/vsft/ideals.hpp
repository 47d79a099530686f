#pragma once

#include "vsft/exponents.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vsft {

/// Which monomials are zero in the ring. Two sources: a nilpotency threshold
/// (x_i^p = 0 on the listed axes) and a monomial kernel (the ring is a
/// quotient by the ideal those vectors generate). Both are closed upward under
/// monomial divisibility.
struct ZeroRule {
  std::optional<std::int64_t> threshold;
  std::vector<std::size_t> threshold_axes;
  std::vector<ExponentVector> kernel;

  bool empty() const noexcept { return !threshold && kernel.empty(); }
  friend bool operator==(const ZeroRule&, const ZeroRule&) = default;
};

/// The monomial layer of a ring model: exponent monoid, zero rule, budgets.
class MonomialContext {
 public:
  MonomialContext(MonoidPresentation monoid, ZeroRule zero = {}, SearchBudget budget = {})
      : monoid_(std::move(monoid)), zero_(std::move(zero)), budget_(budget) {}

  const MonoidPresentation& monoid() const noexcept { return monoid_; }
  const ZeroRule& zero_rule() const noexcept { return zero_; }
  const SearchBudget& budget() const noexcept { return budget_; }
  std::size_t dim() const noexcept { return monoid_.dim(); }

  bool in_monoid(const ExponentVector& e) const { return monoid_.contains(e, budget_); }
  bool is_zero(const ExponentVector& e) const;

  friend bool operator==(const MonomialContext& a, const MonomialContext& b) {
    return a.monoid_ == b.monoid_ && a.zero_ == b.zero_;
  }

 private:
  MonoidPresentation monoid_;
  ZeroRule zero_;
  SearchBudget budget_;
};

using ContextPtr = std::shared_ptr<const MonomialContext>;

/// Ideal generated by finitely many monomials of a context. Generators keep
/// their declared order (witnesses are reported against it); exact duplicates
/// and zero monomials are dropped. `minimalized()` gives the irredundant set.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Throws PreconditionViolated if a generator is outside the monoid.
  MonomialIdeal(ContextPtr ctx, std::vector<ExponentVector> generators);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

  /// Irredundant generators: no generator lies in the ideal of the others.
  /// Among equal candidates the earlier one survives.
  MonomialIdeal minimalized() const;

 private:
  ContextPtr ctx_;
  std::vector<ExponentVector> gens_;
};

/// Caps for product enumeration.
struct ProductBudget {
  std::uint64_t max_products = 2'000'000;
};

bool ideal_member(const MonomialIdeal& ideal, const ExponentVector& target);
/// True iff every generator of `inner` lies in `outer`.
bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b, const ProductBudget& budget = {});
/// Generated by all m-fold products of generators, minimalized.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::uint64_t m, const ProductBudget& budget = {});
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

enum class BoundedStatus { Verified, Refuted, Inconclusive };

struct BoundedIndex {
  BoundedStatus status = BoundedStatus::Inconclusive;
  std::uint64_t index = 0;  // meaningful when Verified
  std::string note;
};

/// Least k <= kmax with k*target in B. Refuted only when the sequence k*target
/// is provably stationary (target is the zero vector); otherwise Inconclusive
/// past kmax.
BoundedIndex radical_member(const MonomialIdeal& b, const ExponentVector& target, std::uint64_t kmax);

/// Multiset (or set, when `distinct`) of generator indices, sorted ascending.
struct ProductWitness {
  std::vector<std::size_t> factors;
  ExponentVector product;
};

/// Lexicographically least n-element multiset of generator indices of
/// `gens` whose product is not in `target`, or nullopt if every such product
/// lies in it. Prefixes already inside `target` are pruned.
std::optional<ProductWitness> lex_least_product_outside(const std::vector<ExponentVector>& gens,
                                                        std::uint64_t n, const MonomialIdeal& target,
                                                        bool distinct = false,
                                                        const ProductBudget& budget = {});

/// Least m <= mmax such that every m-fold product of `gens` lies in `target`.
/// Survivor enumeration: products already in `target` are dropped level by level.
BoundedIndex least_power_inside(const std::vector<ExponentVector>& gens, const MonomialIdeal& target,
                                std::uint64_t mmax, const ProductBudget& budget = {});

/// Least m <= mmax with I^m contained in B. Requires B inside I.
BoundedIndex nilpotency_index(const MonomialIdeal& ideal, const MonomialIdeal& sub, std::uint64_t mmax,
                              const ProductBudget& budget = {});

}  // namespace vsft
