#include "vsft/exponents.hpp"

#include "int128.hpp"

#include "vsft/errors.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace vsft {

WorkCounters& work_counters() noexcept {
  thread_local WorkCounters counters;
  return counters;
}

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector ExponentVector::from_dense(std::span<const Rational> values) {
  ExponentVector e(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) e.entries_.emplace_back(static_cast<std::uint32_t>(i), values[i]);
  return e;
}

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t axis, Rational value) {
  ExponentVector e(dim);
  e.set(axis, value);
  return e;
}

Rational ExponentVector::operator[](std::size_t axis) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), axis,
                             [](const Entry& en, std::size_t a) { return en.first < a; });
  if (it != entries_.end() && it->first == axis) return it->second;
  return 0;
}

void ExponentVector::set(std::size_t axis, Rational value) {
  if (axis >= dim_) throw PreconditionViolated("axis " + std::to_string(axis) + " outside dimension " + std::to_string(dim_));
  auto it = std::lower_bound(entries_.begin(), entries_.end(), axis,
                             [](const Entry& en, std::size_t a) { return en.first < a; });
  const bool present = it != entries_.end() && it->first == axis;
  if (value.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    entries_.insert(it, Entry{static_cast<std::uint32_t>(axis), value});
  }
}

std::vector<Rational> ExponentVector::dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& [i, v] : entries_) out[i] = v;
  return out;
}

Rational ExponentVector::total_degree() const {
  Rational s;
  for (const auto& en : entries_) s += en.second;
  return s;
}

bool ExponentVector::has_negative_entry() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Entry& en) { return en.second.sign() < 0; });
}

ExponentVector ExponentVector::embedded(std::size_t new_dim) const {
  if (new_dim < dim_) throw PreconditionViolated("cannot embed into a smaller dimension");
  ExponentVector e = *this;
  e.dim_ = new_dim;
  return e;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector e = *this;
  for (auto& en : e.entries_) en.second = -en.second;
  return e;
}

namespace {

template <class Op>
ExponentVector merge(const ExponentVector& a, const ExponentVector& b, Op op) {
  if (a.dim() != b.dim())
    throw PreconditionViolated("dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  std::vector<Rational> d = a.dense();
  for (const auto& [i, v] : b.entries()) d[i] = op(d[i], v);
  return ExponentVector::from_dense(d);
}

}  // namespace

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  *this = merge(*this, o, [](const Rational& x, const Rational& y) { return x + y; });
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  *this = merge(*this, o, [](const Rational& x, const Rational& y) { return x - y; });
  return *this;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  // Larger exponent on the earliest differing axis sorts later.
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    const std::uint32_t ai = i < a.entries_.size() ? a.entries_[i].first : UINT32_MAX;
    const std::uint32_t bj = j < b.entries_.size() ? b.entries_[j].first : UINT32_MAX;
    const std::uint32_t axis = std::min(ai, bj);
    const Rational av = ai == axis ? a.entries_[i].second : Rational(0);
    const Rational bv = bj == axis ? b.entries_[j].second : Rational(0);
    if (auto c = av <=> bv; c != 0) return c;
    if (ai == axis) ++i;
    if (bj == axis) ++j;
  }
  return std::strong_ordering::equal;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  const auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << ')';
  return os.str();
}

ExponentVector monoid_add(const ExponentVector& a, const ExponentVector& b) { return a + b; }

ExponentVector scalar_multiple(const ExponentVector& e, std::int64_t k) {
  if (k < 0) throw PreconditionViolated("scalar multiple needs k >= 0");
  ExponentVector out(e.dim());
  if (k == 0) return out;
  for (const auto& [i, v] : e.entries()) out.set(i, v * Rational(k));
  return out;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& e) const noexcept {
  std::size_t h = e.dim();
  for (const auto& [i, v] : e.entries()) {
    h ^= std::hash<std::uint32_t>{}(i) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<Rational>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string render_monomial(const ExponentVector& e, std::span<const std::string> axis_names) {
  auto name = [&](std::size_t i) {
    return i < axis_names.size() ? axis_names[i] : "z" + std::to_string(i);
  };
  auto factor = [&](std::size_t i, const Rational& v) {
    if (v == Rational(1)) return name(i);
    if (v.is_integer()) return name(i) + "^" + v.to_string();
    return name(i) + "^(" + v.to_string() + ")";
  };
  std::vector<std::string> num, den;
  for (const auto& [i, v] : e.entries()) {
    if (v.sign() > 0)
      num.push_back(factor(i, v));
    else
      den.push_back(factor(i, -v));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
    return s;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (den.size() == 1) out += "/" + den.front();
  if (den.size() > 1) out += "/(" + join(den) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// MonoidPresentation

struct MonoidPresentation::Impl {
  std::size_t dim = 0;
  std::vector<ExponentVector> generators;
  std::vector<Rational> grading;
  std::int64_t den_bound = 1;

  // Search tables: coordinates scaled by den_bound, grades by den_bound * the
  // grading's own common denominator. Generators are stored in search order
  // (decreasing grade, ties by original index).
  std::vector<std::int64_t> weights;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::int64_t>> sgen;
  std::vector<std::int64_t> slam;

  // Per-suffix pruning data, suffix j = generators order[j..].
  struct Suffix {
    std::vector<std::size_t> max_ratio_gen;  // argmax g_c / lam(g)
    std::vector<std::size_t> min_ratio_gen;
    std::vector<std::int64_t> max_neg;       // max(-g_c) over g_c < 0, else 0
    std::vector<std::int64_t> min_cover_pos; // min g_c over generators with a negative entry
    std::vector<bool> all_nonneg;
    int max_cover = 0;
    std::int64_t min_cover_lam = std::numeric_limits<std::int64_t>::max();
  };
  std::vector<Suffix> suffix;

  // Fast path for S = (rank-1 monoid on line_axis) x (free axes): each free
  // axis is touched only by its unit generator, and every other generator
  // lives on line_axis with a positive entry. reach[v] says whether
  // v / den_bound lies in the rank-1 part.
  std::optional<std::size_t> line_axis;
  std::vector<bool> free_axis;
  std::vector<std::int64_t> line_steps;
  mutable std::mutex reach_mutex;
  mutable std::vector<char> reach;

  void detect_line();

  void build();
  /// nullopt when the table would be too large to be worth building.
  std::optional<bool> reachable(std::int64_t v) const;
  std::optional<std::vector<std::int64_t>> scale(const ExponentVector& e) const;
};

void MonoidPresentation::Impl::build() {
  den_bound = 1;
  for (const auto& g : generators)
    for (const auto& en : g.entries()) den_bound = lcm64(den_bound, en.second.den());
  std::int64_t wden = 1;
  for (const auto& w : grading) wden = lcm64(wden, w.den());
  weights.assign(dim, 0);
  for (std::size_t c = 0; c < dim; ++c) weights[c] = (grading[c] * Rational(wden)).num();

  const std::size_t n = generators.size();
  std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(dim, 0));
  std::vector<std::int64_t> lam(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [c, v] : generators[i].entries()) raw[i][c] = (v * Rational(den_bound)).num();
    for (std::size_t c = 0; c < dim; ++c) lam[i] = checked_add(lam[i], checked_mul(weights[c], raw[i][c]));
  }
  order.resize(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lam[a] > lam[b]; });
  sgen.clear();
  slam.clear();
  for (auto i : order) {
    sgen.push_back(raw[i]);
    slam.push_back(lam[i]);
  }

  detect_line();

  suffix.assign(n + 1, Suffix{});
  for (auto& s : suffix) {
    s.max_ratio_gen.assign(dim, SIZE_MAX);
    s.min_ratio_gen.assign(dim, SIZE_MAX);
    s.max_neg.assign(dim, 0);
    s.min_cover_pos.assign(dim, std::numeric_limits<std::int64_t>::max());
    s.all_nonneg.assign(dim, true);
  }
  for (std::size_t j = n; j-- > 0;) {
    Suffix s = suffix[j + 1];
    const auto& g = sgen[j];
    int negs = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      auto better = [&](std::size_t cur, bool want_max) {
        if (cur == SIZE_MAX) return true;
        const i128 lhs = static_cast<i128>(g[c]) * slam[cur];
        const i128 rhs = static_cast<i128>(sgen[cur][c]) * slam[j];
        return want_max ? lhs > rhs : lhs < rhs;
      };
      if (better(s.max_ratio_gen[c], true)) s.max_ratio_gen[c] = j;
      if (better(s.min_ratio_gen[c], false)) s.min_ratio_gen[c] = j;
      if (g[c] < 0) {
        ++negs;
        s.all_nonneg[c] = false;
        s.max_neg[c] = std::max(s.max_neg[c], -g[c]);
      }
    }
    if (negs > 0) {
      s.max_cover = std::max(s.max_cover, negs);
      s.min_cover_lam = std::min(s.min_cover_lam, slam[j]);
      for (std::size_t c = 0; c < dim; ++c) s.min_cover_pos[c] = std::min(s.min_cover_pos[c], g[c]);
    }
    suffix[j] = std::move(s);
  }
}

void MonoidPresentation::Impl::detect_line() {
  free_axis.assign(dim, false);
  std::vector<int> touching(dim, 0);
  for (const auto& g : generators)
    for (const auto& [c, v] : g.entries()) ++touching[c];
  for (const auto& g : generators)
    if (g.entries().size() == 1 && g.entries()[0].second == Rational(1) && touching[g.entries()[0].first] == 1)
      free_axis[g.entries()[0].first] = true;
  std::optional<std::size_t> axis;
  std::vector<std::int64_t> steps;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.entries().size() == 1 && free_axis[g.entries()[0].first]) continue;
    if (g.entries().size() != 1 || g.entries()[0].second.sign() <= 0) return;
    const std::size_t c = g.entries()[0].first;
    if (axis && *axis != c) return;
    axis = c;
    steps.push_back((g.entries()[0].second * Rational(den_bound)).num());
  }
  if (!axis) return;
  line_axis = axis;
  line_steps = std::move(steps);
}

std::optional<bool> MonoidPresentation::Impl::reachable(std::int64_t v) const {
  constexpr std::int64_t kMaxCells = std::int64_t{1} << 27;
  if (v < 0) return false;
  if (v > kMaxCells / static_cast<std::int64_t>(line_steps.size() + 1)) return std::nullopt;
  std::lock_guard lock(reach_mutex);
  if (static_cast<std::int64_t>(reach.size()) <= v) {
    const auto old = static_cast<std::int64_t>(reach.size());
    const std::int64_t top = std::max<std::int64_t>(v + 1, 2 * old);
    reach.resize(static_cast<std::size_t>(top), 0);
    if (old == 0) reach[0] = 1;
    for (std::int64_t x = std::max<std::int64_t>(old, 1); x < top; ++x)
      for (const auto step : line_steps)
        if (step <= x && reach[static_cast<std::size_t>(x - step)]) {
          reach[static_cast<std::size_t>(x)] = 1;
          break;
        }
  }
  return reach[static_cast<std::size_t>(v)] != 0;
}

std::optional<std::vector<std::int64_t>> MonoidPresentation::Impl::scale(const ExponentVector& e) const {
  std::vector<std::int64_t> out(dim, 0);
  for (const auto& [c, v] : e.entries()) {
    if (den_bound % v.den() != 0) return std::nullopt;
    out[c] = checked_mul(v.num(), den_bound / v.den());
  }
  return out;
}

MonoidPresentation::MonoidPresentation(std::size_t dim, std::vector<ExponentVector> generators,
                                       std::vector<Rational> grading) {
  if (grading.size() != dim) throw PreconditionViolated("grading length differs from dimension");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.dim() != dim) throw PreconditionViolated("generator " + std::to_string(i) + " has wrong dimension");
    if (g.is_zero()) throw PreconditionViolated("generator " + std::to_string(i) + " is the zero vector");
    Rational lam;
    for (const auto& [c, v] : g.entries()) lam += grading[c] * v;
    if (lam.sign() <= 0)
      throw PreconditionViolated("grading is not positive on generator " + std::to_string(i) + " " + g.to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j] == g) throw PreconditionViolated("generators " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  auto impl = std::make_shared<Impl>();
  impl->dim = dim;
  impl->generators = std::move(generators);
  impl->grading = std::move(grading);
  impl->build();
  impl_ = std::move(impl);
}

std::size_t MonoidPresentation::dim() const noexcept { return impl_ ? impl_->dim : 0; }

const std::vector<ExponentVector>& MonoidPresentation::generators() const noexcept {
  static const std::vector<ExponentVector> empty;
  return impl_ ? impl_->generators : empty;
}

const std::vector<Rational>& MonoidPresentation::grading() const noexcept {
  static const std::vector<Rational> empty;
  return impl_ ? impl_->grading : empty;
}

std::int64_t MonoidPresentation::denominator_bound() const noexcept { return impl_ ? impl_->den_bound : 1; }

Rational MonoidPresentation::degree(const ExponentVector& e) const {
  Rational s;
  for (const auto& [c, v] : e.entries()) s += grading().at(c) * v;
  return s;
}

MonoidPresentation MonoidPresentation::with_free_axis() const {
  const std::size_t d = dim() + 1;
  std::vector<ExponentVector> gens;
  for (const auto& g : generators()) gens.push_back(g.embedded(d));
  gens.push_back(ExponentVector::unit(d, d - 1));
  auto grading = this->grading();
  grading.push_back(1);
  return MonoidPresentation(d, std::move(gens), std::move(grading));
}

bool MonoidPresentation::contains(const ExponentVector& target, const SearchBudget& budget) const {
  if (impl_ && impl_->line_axis && target.dim() == impl_->dim) {
    const Impl& s = *impl_;
    for (const auto& [c, v] : target.entries())
      if (c != *s.line_axis && (!s.free_axis[c] || !v.is_integer() || v.sign() < 0)) return false;
    const Rational x = target[*s.line_axis];
    if (s.den_bound % x.den() != 0) return false;
    if (const auto r = s.reachable(checked_mul(x.num(), s.den_bound / x.den()))) {
      ++work_counters().search_nodes;
      return *r;
    }
  }
  return member(target, budget).has_value();
}

ExponentVector MonoidPresentation::evaluate(const MonoidMembershipWitness& w) const {
  ExponentVector sum(dim());
  for (const auto& [i, k] : w.multiplicities) sum += scalar_multiple(generators().at(i), static_cast<std::int64_t>(k));
  return sum;
}

bool operator==(const MonoidPresentation& a, const MonoidPresentation& b) {
  return a.dim() == b.dim() && a.generators() == b.generators() && a.grading() == b.grading();
}

namespace {

struct StateKey {
  std::vector<std::int64_t> residual;
  std::size_t index;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::size_t h = k.index * 0x9e3779b97f4a7c15ull;
    for (auto v : k.residual) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

std::optional<MonoidMembershipWitness> MonoidPresentation::member(const ExponentVector& target,
                                                                  const SearchBudget& budget) const {
  if (!impl_) return target.is_zero() ? std::optional<MonoidMembershipWitness>(MonoidMembershipWitness{}) : std::nullopt;
  const Impl& s = *impl_;
  if (target.dim() != s.dim) throw PreconditionViolated("target dimension differs from monoid dimension");
  if (target.is_zero()) return MonoidMembershipWitness{};
  auto scaled = s.scale(target);
  if (!scaled) return std::nullopt;  // denominator outside the monoid's lattice

  std::int64_t lam0 = 0;
  for (std::size_t c = 0; c < s.dim; ++c) lam0 = checked_add(lam0, checked_mul(s.weights[c], (*scaled)[c]));
  if (lam0 <= 0) return std::nullopt;

  const std::size_t n = s.sgen.size();
  const std::size_t d = s.dim;
  std::vector<std::uint64_t> mult(n, 0);
  std::unordered_set<StateKey, StateKeyHash> failed;
  std::uint64_t nodes = 0;
  struct Tally {
    std::uint64_t& n;
    ~Tally() { work_counters().search_nodes += n; }
  } tally{nodes};

  auto pruned = [&](std::size_t j, const std::vector<std::int64_t>& r, std::int64_t lam) {
    const auto& sf = s.suffix[j];
    for (std::size_t c = 0; c < d; ++c) {
      // r_c / lam must lie within [min, max] of g_c / lam(g) over the suffix.
      const std::size_t hi = sf.max_ratio_gen[c];
      const std::size_t lo = sf.min_ratio_gen[c];
      const i128 rc = r[c];
      if (rc * s.slam[hi] > static_cast<i128>(lam) * s.sgen[hi][c]) return true;
      if (rc * s.slam[lo] < static_cast<i128>(lam) * s.sgen[lo][c]) return true;
    }
    // Negative coordinates can only be paid for by generators with negative
    // entries there; count the fewest such uses and charge them against the
    // coordinates no suffix generator can decrease.
    std::int64_t needed = 0;
    for (std::size_t c = 0; c < d; ++c) {
      if (r[c] >= 0) continue;
      if (sf.max_neg[c] == 0) return true;
      const std::int64_t uses = (-r[c] + sf.max_neg[c] - 1) / sf.max_neg[c];
      needed = sf.max_cover <= 1 ? needed + uses : std::max(needed, uses);
    }
    if (needed == 0) return false;
    if (static_cast<i128>(needed) * sf.min_cover_lam > lam) return true;
    for (std::size_t c = 0; c < d; ++c) {
      if (!sf.all_nonneg[c] || sf.min_cover_pos[c] <= 0) continue;
      if (static_cast<i128>(needed) * sf.min_cover_pos[c] > r[c]) return true;
    }
    return false;
  };

  auto dfs = [&](auto& self, std::size_t j, std::vector<std::int64_t>& r, std::int64_t lam) -> bool {
    if (lam == 0) return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
    if (j == n) return false;
    if (++nodes > budget.max_nodes)
      throw BudgetExceeded("search-nodes", "monoid membership search exceeded " + std::to_string(budget.max_nodes) + " nodes");
    if (pruned(j, r, lam)) return false;
    StateKey key{r, j};
    if (failed.contains(key)) return false;

    const auto& g = s.sgen[j];
    const std::int64_t kmax = lam / s.slam[j];
    std::vector<std::int64_t> cur = r;
    for (std::int64_t k = 0; k <= kmax; ++k) {
      if (k > 0)
        for (std::size_t c = 0; c < d; ++c) cur[c] -= g[c];
      mult[j] = static_cast<std::uint64_t>(k);
      if (self(self, j + 1, cur, lam - k * s.slam[j])) return true;
    }
    mult[j] = 0;
    failed.insert(std::move(key));
    return false;
  };

  std::vector<std::int64_t> r = *scaled;
  if (!dfs(dfs, 0, r, lam0)) return std::nullopt;
  MonoidMembershipWitness w;
  for (std::size_t j = 0; j < n; ++j)
    if (mult[j] > 0) w.multiplicities[s.order[j]] = mult[j];
  return w;
}

}  // namespace vsft
