#include "vsft/ideals.hpp"

#include "vsft/errors.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace vsft {

bool MonomialContext::is_zero(const ExponentVector& e) const {
  if (zero_.threshold) {
    for (auto axis : zero_.threshold_axes)
      if (e[axis] >= Rational(*zero_.threshold)) return true;
  }
  for (const auto& k : zero_.kernel)
    if (monoid_.contains(e - k, budget_)) return true;
  return false;
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<ExponentVector> generators) : ctx_(std::move(ctx)) {
  if (!ctx_) throw PreconditionViolated("ideal without a monomial context");
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (auto& g : generators) {
    if (g.dim() != ctx_->dim()) throw PreconditionViolated("ideal generator has wrong dimension: " + g.to_string());
    if (!ctx_->in_monoid(g)) throw PreconditionViolated("ideal generator " + g.to_string() + " is not in the monoid");
    if (ctx_->is_zero(g)) continue;
    if (seen.insert(g).second) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::minimalized() const {
  const auto& s = ctx_->monoid();
  std::vector<ExponentVector> keep;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens_.size() && !redundant; ++j) {
      if (i == j) continue;
      const ExponentVector diff = gens_[i] - gens_[j];
      if (s.degree(diff).sign() < 0) continue;
      redundant = s.contains(diff, ctx_->budget());
    }
    if (!redundant) keep.push_back(gens_[i]);
  }
  MonomialIdeal out;
  out.ctx_ = ctx_;
  out.gens_ = std::move(keep);
  return out;
}

bool ideal_member(const MonomialIdeal& ideal, const ExponentVector& target) {
  const auto& ctx = *ideal.context();
  if (ctx.is_zero(target)) return true;
  const auto& s = ctx.monoid();
  for (const auto& g : ideal.generators()) {
    const ExponentVector diff = target - g;
    if (s.degree(diff).sign() < 0) continue;
    if (s.contains(diff, ctx.budget())) return true;
  }
  return false;
}

bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  for (const auto& g : inner.generators())
    if (!ideal_member(outer, g)) return false;
  return true;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b, const ProductBudget& budget) {
  const auto ma = a.minimalized();
  const auto mb = b.minimalized();
  const std::uint64_t count = static_cast<std::uint64_t>(ma.generators().size()) * mb.generators().size();
  if (count > budget.max_products)
    throw BudgetExceeded("products", "ideal product needs " + std::to_string(count) + " products");
  work_counters().products += count;
  std::vector<ExponentVector> gens;
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (const auto& x : ma.generators())
    for (const auto& y : mb.generators()) {
      auto p = x + y;
      if (seen.insert(p).second) gens.push_back(std::move(p));
    }
  return MonomialIdeal(a.context(), std::move(gens)).minimalized();
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::uint64_t m, const ProductBudget& budget) {
  if (m == 0) throw PreconditionViolated("ideal power needs m >= 1");
  const auto base = ideal.minimalized();
  auto result = base;
  for (std::uint64_t i = 1; i < m; ++i) result = ideal_product(result, base, budget);
  return result;
}

BoundedIndex radical_member(const MonomialIdeal& b, const ExponentVector& target, std::uint64_t kmax) {
  if (kmax == 0) throw PreconditionViolated("radical search needs kmax >= 1");
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if (ideal_member(b, scalar_multiple(target, static_cast<std::int64_t>(k)))) return {BoundedStatus::Verified, k, {}};
    if (target.is_zero())
      return {BoundedStatus::Refuted, 0, "every power of the unit monomial equals 1, which is outside the ideal"};
  }
  return {BoundedStatus::Inconclusive, 0, "no power up to " + std::to_string(kmax) + " lies in the ideal"};
}

namespace {

struct PrefixKey {
  ExponentVector product;
  std::size_t start;
  std::uint64_t remaining;
  bool operator==(const PrefixKey&) const = default;
};

struct PrefixKeyHash {
  std::size_t operator()(const PrefixKey& k) const noexcept {
    return ExponentVectorHash{}(k.product) ^ (k.start * 0x9e3779b97f4a7c15ull) ^ (k.remaining << 20);
  }
};

}  // namespace

std::optional<ProductWitness> lex_least_product_outside(const std::vector<ExponentVector>& gens,
                                                        std::uint64_t n, const MonomialIdeal& target,
                                                        bool distinct, const ProductBudget& budget) {
  const std::size_t dim = target.context()->dim();
  std::unordered_map<ExponentVector, bool, ExponentVectorHash> inside_cache;
  auto inside = [&](const ExponentVector& p) {
    auto it = inside_cache.find(p);
    if (it != inside_cache.end()) return it->second;
    const bool v = ideal_member(target, p);
    inside_cache.emplace(p, v);
    return v;
  };

  std::unordered_set<PrefixKey, PrefixKeyHash> exhausted;
  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
  struct Tally {
    std::uint64_t& n;
    ~Tally() { work_counters().products += n; }
  } tally{nodes};

  auto dfs = [&](auto& self, std::size_t start, std::uint64_t remaining, const ExponentVector& prod) -> bool {
    if (remaining == 0) return !inside(prod);
    if (!chosen.empty() && inside(prod)) return false;
    if (++nodes > budget.max_products)
      throw BudgetExceeded("products", "product enumeration exceeded " + std::to_string(budget.max_products) + " nodes");
    PrefixKey key{prod, start, remaining};
    if (exhausted.contains(key)) return false;
    for (std::size_t i = start; i < gens.size(); ++i) {
      if (distinct && gens.size() - i < remaining) break;
      chosen.push_back(i);
      if (self(self, distinct ? i + 1 : i, remaining - 1, prod + gens[i])) return true;
      chosen.pop_back();
    }
    exhausted.insert(std::move(key));
    return false;
  };

  ExponentVector one(dim);
  if (!dfs(dfs, 0, n, one)) return std::nullopt;
  ProductWitness w;
  w.factors = chosen;
  w.product = one;
  for (auto i : chosen) w.product += gens[i];
  return w;
}

BoundedIndex least_power_inside(const std::vector<ExponentVector>& gens, const MonomialIdeal& target,
                                std::uint64_t mmax, const ProductBudget& budget) {
  if (mmax == 0) throw PreconditionViolated("power search needs mmax >= 1");
  std::vector<ExponentVector> level;
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (const auto& g : gens)
    if (seen.insert(g).second && !ideal_member(target, g)) level.push_back(g);
  std::uint64_t work = 0;
  struct Tally {
    std::uint64_t& n;
    ~Tally() { work_counters().products += n; }
  } tally{work};
  for (std::uint64_t m = 1; m <= mmax; ++m) {
    if (level.empty()) return {BoundedStatus::Verified, m, {}};
    if (m == mmax) break;
    std::vector<ExponentVector> next;
    std::unordered_set<ExponentVector, ExponentVectorHash> next_seen;
    for (const auto& s : level) {
      for (const auto& g : gens) {
        if (++work > budget.max_products)
          throw BudgetExceeded("products", "survivor enumeration exceeded " + std::to_string(budget.max_products) + " products");
        auto p = s + g;
        if (!next_seen.insert(p).second) continue;
        if (!ideal_member(target, p)) next.push_back(std::move(p));
      }
    }
    level = std::move(next);
  }
  return {BoundedStatus::Inconclusive, 0,
          std::to_string(level.size()) + " products of length " + std::to_string(mmax) + " still outside"};
}

BoundedIndex nilpotency_index(const MonomialIdeal& ideal, const MonomialIdeal& sub, std::uint64_t mmax,
                              const ProductBudget& budget) {
  if (!ideal_contains(ideal, sub)) throw PreconditionViolated("sub-ideal is not contained in the ideal");
  return least_power_inside(ideal.minimalized().generators(), sub, mmax, budget);
}

}  // namespace vsft
