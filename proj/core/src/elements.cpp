#include "vsft/elements.hpp"

#include "vsft/errors.hpp"

#include <random>
#include <sstream>

namespace vsft {

namespace {

std::uint64_t two_adic(const BigInt& c) {
  if (c == 0) return 0;
  return boost::multiprecision::lsb(boost::multiprecision::abs(c));
}

}  // namespace

ExponentVector ElementRing::term_exponent(const ExponentVector& key, const BigInt& coeff) const {
  if (!characteristic.is_zero() || !two_axis) return key;
  ExponentVector e = key;
  e.set(*two_axis, key[*two_axis] + Rational(static_cast<std::int64_t>(two_adic(coeff))));
  return e;
}

BigInt PolyElement::reduce(BigInt c) const {
  const auto p = ring_->characteristic.value();
  if (p == 0) return c;
  const BigInt bp = p;
  c %= bp;
  if (c < 0) c += bp;
  return c;
}

void PolyElement::add_term(ExponentVector key, BigInt coeff) {
  const auto& r = *ring_;
  if (r.characteristic.is_zero() && r.two_axis) {
    const Rational q = key[*r.two_axis];
    const std::int64_t fl = q.floor();
    if (fl < 0) throw PreconditionViolated("monomial " + key.to_string() + " needs a negative power of 2");
    if (fl > 0) {
      coeff <<= static_cast<unsigned>(fl);
      key.set(*r.two_axis, q.frac());
    }
  }
  coeff = reduce(std::move(coeff));
  if (coeff == 0) return;
  auto it = terms_.find(key);
  BigInt total = it == terms_.end() ? coeff : reduce(it->second + coeff);
  const bool vanishes = total == 0 || r.context->is_zero(r.term_exponent(key, total));
  if (vanishes) {
    if (it != terms_.end()) terms_.erase(it);
    return;
  }
  if (r.max_degree.sign() > 0 && r.context->monoid().degree(r.term_exponent(key, total)) > r.max_degree)
    throw BudgetExceeded("degree", "term " + key.to_string() + " exceeds the degree cap " + r.max_degree.to_string());
  if (it == terms_.end())
    terms_.emplace(std::move(key), std::move(total));
  else
    it->second = std::move(total);
}

PolyElement PolyElement::monomial(RingPtr ring, const ExponentVector& e, const BigInt& coeff) {
  PolyElement f(std::move(ring));
  f.add_term(e, coeff);
  return f;
}

PolyElement PolyElement::constant(RingPtr ring, const BigInt& c) {
  const std::size_t d = ring->context->dim();
  return monomial(std::move(ring), ExponentVector(d), c);
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PolyElement& PolyElement::operator*=(const PolyElement& o) {
  PolyElement out(ring_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
  *this = std::move(out);
  return *this;
}

PolyElement PolyElement::scaled(const BigInt& c) const {
  PolyElement out(ring_);
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

std::vector<ExponentVector> PolyElement::term_exponents() const {
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(ring_->term_exponent(k, c));
  return out;
}

std::string PolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest grlex term first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    BigInt mag = c;
    bool neg = mag < 0;
    if (neg) mag = -mag;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const std::string mono = render_monomial(k, ring_->axis_names);
    if (mono == "1")
      os << mag;
    else if (mag == 1)
      os << mono;
    else
      os << mag << '*' << mono;
  }
  return os.str();
}

PolyElement element_multiply(const PolyElement& a, const PolyElement& b) {
  if (a.ring() != b.ring() && !(*a.ring()->context == *b.ring()->context))
    throw PreconditionViolated("elements belong to different ring models");
  return a * b;
}

PolyElement element_power(const PolyElement& f, std::uint64_t n) {
  if (n == 0) throw PreconditionViolated("element power needs n >= 1");
  PolyElement base = f;
  std::optional<PolyElement> acc;
  while (n) {
    if (n & 1) acc = acc ? *acc * base : base;
    n >>= 1;
    if (n) base = base * base;
  }
  return *acc;
}

bool element_in_ideal(const PolyElement& f, const MonomialIdeal& ideal) {
  for (const auto& e : f.term_exponents())
    if (!ideal_member(ideal, e)) return false;
  return true;
}

bool element_in_ring(const PolyElement& f) {
  const auto& ctx = *f.ring()->context;
  for (const auto& e : f.term_exponents())
    if (!ctx.in_monoid(e)) return false;
  return true;
}

PolyElement random_element(const RingPtr& ring, const MonomialIdeal& ideal, std::uint64_t seed,
                           const RandomElementOptions& opts) {
  PolyElement f(ring);
  const auto& gens = ideal.generators();
  if (gens.empty()) return f;
  std::mt19937_64 rng(seed);
  const auto& mgens = ring->context->monoid().generators();
  std::vector<const ExponentVector*> multipliers;
  for (const auto& g : mgens)
    if (!opts.t_axis || g[*opts.t_axis].is_zero()) multipliers.push_back(&g);

  const std::uint64_t p = ring->characteristic.value();
  const std::uint64_t nterms = 1 + rng() % std::max<std::uint64_t>(opts.max_terms, 1);
  for (std::uint64_t t = 0; t < nterms; ++t) {
    ExponentVector e = gens[rng() % gens.size()];
    const std::uint64_t factors = multipliers.empty() ? 0 : rng() % (opts.max_multiplier_factors + 1);
    for (std::uint64_t k = 0; k < factors; ++k) e += *multipliers[rng() % multipliers.size()];
    if (opts.t_axis && opts.t_degree > 0) {
      const auto j = static_cast<std::int64_t>(rng() % (opts.t_degree + 1));
      e.set(*opts.t_axis, e[*opts.t_axis] + Rational(j));
    }
    BigInt c;
    if (p > 0) {
      c = 1 + rng() % (p - 1);
    } else {
      const auto mag = static_cast<std::int64_t>(1 + rng() % 3);
      c = (rng() & 1) ? -mag : mag;
    }
    f += PolyElement::monomial(ring, e, c);
  }
  return f;
}

}  // namespace vsft
