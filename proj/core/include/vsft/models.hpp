#pragma once

#include "vsft/elements.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vsft {

/// Per-k refutation witnesses expected from a model: the product of the
/// first k generators listed here (indices into the named ideal).
struct WitnessPattern {
  std::string description;
  std::string ideal;
  std::vector<std::size_t> generator_indices;
  friend bool operator==(const WitnessPattern&, const WitnessPattern&) = default;
};

/// A truncated ring model: coefficients, exponent monoid, zero rule, and the
/// named monomial ideals its claims talk about.
struct RingModel {
  std::string name;  // catalog kind, or "explicit"
  std::map<std::string, std::int64_t> params;
  RingPtr ring;
  /// Declared generator lists, in the order witnesses are reported against.
  std::map<std::string, std::vector<ExponentVector>> ideals;
  /// Exponent of the integer 2 in characteristic-0 models.
  std::optional<ExponentVector> two;
  std::optional<WitnessPattern> witness_pattern;
  /// True when the ring has finitely many monomials (element space enumerable).
  bool finite = false;

  const ContextPtr& context() const { return ring->context; }
  const MonoidPresentation& monoid() const { return ring->context->monoid(); }
  PrimeChar characteristic() const { return ring->characteristic; }
  const std::vector<std::string>& axis_names() const { return ring->axis_names; }

  /// Throws PreconditionViolated for unknown names.
  MonomialIdeal ideal(const std::string& ideal_name) const;
  std::string render(const ExponentVector& e) const { return render_monomial(e, ring->axis_names); }

  /// R[t]: one extra free (non-nilpotent) axis with the given name.
  RingModel extended(const std::string& axis_name = "t") const;
  /// Same model with a different membership budget and optional degree cap.
  RingModel with_budget(const SearchBudget& budget, std::optional<Rational> degree_cap = std::nullopt) const;
  /// R / (kernel), kernel given by monomial generators.
  RingModel quotient(const std::vector<ExponentVector>& kernel) const;
  /// All nonzero monomials; only for finite models.
  std::vector<ExponentVector> finite_monomials() const;

  friend bool operator==(const RingModel& a, const RingModel& b);
};

/// One checkable statement about a model: the data it concerns, the check to
/// run, and the expected verdict for this example.
struct CatalogClaim {
  std::string id;
  std::string kind;
  std::string ideal;
  std::string sub_ideal;
  std::string aux_ideal;
  std::int64_t index = 0;
  std::int64_t m = 0;
  std::int64_t kmin = 1;
  std::int64_t kmax = 0;
  std::int64_t degree = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ExponentVector> vectors;
  std::vector<Rational> values;
  std::string mode;
  // Index tables vary one truncation parameter of a catalog model.
  std::string vary;
  std::int64_t vary_from = 0;
  std::int64_t vary_to = 0;

  std::string expect = "verified";
  std::optional<std::string> expect_certificate;
  std::optional<std::int64_t> expect_index;
};

/// Catalog defaults: v=5, M=4, D=10, nmax=8, denBound=6.
struct CatalogDefaults {
  static constexpr std::int64_t v = 5;
  static constexpr std::int64_t M = 4;
  static constexpr std::int64_t D = 10;
  static constexpr std::int64_t nmax = 8;
  static constexpr std::int64_t den_bound = 6;
  static constexpr std::int64_t p = 2;
};

/// F_p[x_1..x_v] / (x_i^p). Ideals: "M" (maximal), "zero".
RingModel frobenius_quotient(std::int64_t p, std::int64_t v);
/// F_2[y, x_i, y/x_i^m]. Ideals: "I" = (y, y/x_i^m : m <= M), "y". The monoid
/// carries y/x_i^m up to m = 2M so index-2 products of I stay inside it.
RingModel fraction_monoid(std::int64_t v, std::int64_t big_m);
/// Z + 2xZ[x], axis 0 = powers of 2, axis 1 = x. Ideals: "I" = (2, 2x, ..., 2x^D), "2".
RingModel int_plus_2x(std::int64_t d);
/// F_2 model of F_2(y_i^2)[[x^2]][xy_i] with y_i^2 adjoined as monoid
/// generators. Ideals: "I" = (x^2, xy_1..xy_v), "x2".
RingModel char2_xy(std::int64_t v, std::int64_t d);
/// Z_(2)[2^(n + 1/2^n) : n <= nmax], one dyadic axis. Ideals: "M", "2".
RingModel dyadic(std::int64_t nmax);
/// R = F_2 + xV with exponents in (1/L)Z, L = lcm(1..denBound). Ideals: "xV", "x".
RingModel rational_valuation(std::int64_t den_bound);
/// V = F_2[x; Q>=0] truncated to exponents in (1/L)N. Ideals: "MV".
RingModel rational_valuation_overring(std::int64_t den_bound);

std::vector<std::string> catalog_names();
/// Build a catalog model; missing params take CatalogDefaults. Throws
/// PreconditionViolated listing the available names on an unknown name.
RingModel make_catalog_model(const std::string& name, const std::map<std::string, std::int64_t>& params = {});

/// Expected claims for this catalog model.
std::vector<CatalogClaim> catalog_claims(const RingModel& model);

}  // namespace vsft
