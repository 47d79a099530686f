#pragma once

#include "vsft/arith.hpp"
#include "vsft/ideals.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vsft {

/// Coefficient layer on top of a monomial context.
///
/// Characteristic p: coefficients live in F_p, keys are monoid exponents.
/// Characteristic 0: integer coefficients. If `two_axis` is set, that axis
/// records powers of the integer 2, so a term c * key stands for the monomial
/// key + v_2(c) * e_two; keys keep only the fractional part of that axis and
/// any integral carry is moved into the coefficient. This covers both the
/// integer model Z + 2xZ[x] (axis 0 = powers of 2, never fractional) and the
/// dyadic model (axis 0 = dyadic powers of 2).
struct ElementRing {
  ContextPtr context;
  PrimeChar characteristic;
  std::optional<std::size_t> two_axis;
  /// Terms whose grade exceeds this raise BudgetExceeded("degree"); 0 = no cap.
  Rational max_degree = 0;
  std::vector<std::string> axis_names;

  ExponentVector term_exponent(const ExponentVector& key, const BigInt& coeff) const;
};

using RingPtr = std::shared_ptr<const ElementRing>;

/// Finite sum of coefficient * monomial in a ring model. Terms are kept in
/// graded-lex order with no zero coefficients, so equality is structural.
class PolyElement {
 public:
  using TermMap = std::map<ExponentVector, BigInt>;

  explicit PolyElement(RingPtr ring) : ring_(std::move(ring)) {}
  /// c * x^e for a monoid exponent e (the 2-axis integer part becomes part of c).
  static PolyElement monomial(RingPtr ring, const ExponentVector& e, const BigInt& coeff = 1);
  static PolyElement constant(RingPtr ring, const BigInt& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator-=(const PolyElement& o);
  PolyElement& operator*=(const PolyElement& o);
  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
  friend PolyElement operator*(PolyElement a, const PolyElement& b) { return a *= b; }
  PolyElement scaled(const BigInt& c) const;

  friend bool operator==(const PolyElement& a, const PolyElement& b) { return a.terms_ == b.terms_; }

  /// Monoid exponents of all terms.
  std::vector<ExponentVector> term_exponents() const;
  std::string to_string() const;

 private:
  void add_term(ExponentVector key, BigInt coeff);
  BigInt reduce(BigInt c) const;

  RingPtr ring_;
  TermMap terms_;
};

PolyElement element_multiply(const PolyElement& a, const PolyElement& b);
/// f^n by repeated squaring; n >= 1.
PolyElement element_power(const PolyElement& f, std::uint64_t n);

/// True iff f lies in the monomial ideal: every term's monoid exponent does.
/// Exact for F_p coefficients, and for the 2-adic integer models because
/// their monomial ideals are graded by key.
bool element_in_ideal(const PolyElement& f, const MonomialIdeal& ideal);

/// Every term exponent lies in the monoid. For Z + 2xZ[x] this is the
/// constraint "coefficient of x^k is even for k >= 1".
bool element_in_ring(const PolyElement& f);

struct RandomElementOptions {
  std::uint64_t max_terms = 4;
  /// Axis carrying the adjoined polynomial variable t, if any.
  std::optional<std::size_t> t_axis;
  std::uint64_t t_degree = 0;
  /// Extra monoid-generator factors per term, drawn uniformly from 0..max.
  std::uint64_t max_multiplier_factors = 1;
};

/// Reproducible element of I * (ring[t] up to the degree bound): a sum of
/// terms c * g * s * t^j with g a generator of I, s a product of monoid
/// generators and c a nonzero coefficient. Deterministic in (seed, ring, I).
PolyElement random_element(const RingPtr& ring, const MonomialIdeal& ideal, std::uint64_t seed,
                           const RandomElementOptions& opts = {});

}  // namespace vsft
