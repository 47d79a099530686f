#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vsft {

using BigInt = boost::multiprecision::cpp_int;
/// Nonnegative by convention; the API rejects negative inputs where it matters.
using BigNat = boost::multiprecision::cpp_int;
/// Always canonical: reduced, positive denominator.
using BigRat = boost::multiprecision::cpp_rational;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Characteristic of a ring model: 0 or a prime below 2^64.
class PrimeChar {
 public:
  constexpr PrimeChar() = default;
  /// Throws PreconditionViolated unless value is 0 or prime.
  explicit PrimeChar(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;

 private:
  std::uint64_t value_ = 0;
};

/// Largest k with p^k | n. Rejects n = 0 and composite p.
std::uint64_t padic_valuation(const BigNat& n, std::uint64_t p);

/// Sum_{k>=1} floor(x / p^k) for rational x >= 0; for integral x this is
/// the p-adic valuation of x!.
std::uint64_t legendre(const BigRat& x, std::uint64_t p);
std::uint64_t legendre(std::uint64_t n, std::uint64_t p);

BigNat factorial(std::uint64_t n);

/// N! / (k_1! ... k_m!). Throws CompositionMismatch if sum(ks) != N.
BigNat multinomial(std::uint64_t total, std::span<const std::uint64_t> parts);

struct FloorCheck {
  bool holds = false;
  std::uint64_t lhs = 0;  // f_p(NM)
  std::uint64_t rhs = 0;  // f_p(N) + sum f_p(a_i)
};

/// Evaluates f_p(NM) >= f_p(N) + f_p(a_1) + ... + f_p(a_m).
/// Requires N > M >= a_1 >= ... >= a_m > 0 and sum a_i <= NM; the first
/// violated clause is reported through PreconditionViolated.
FloorCheck check_floor_inequality(const BigRat& big_n, const BigRat& big_m,
                                  std::span<const BigRat> parts, std::uint64_t p);

struct AlaCheck {
  bool divides_bigint = false;     // N! | multinomial(NM; ks) by exact division
  bool divides_valuation = false;  // v_p(N!) <= v_p(multinomial) for all p <= N, via legendre
  BigNat multinomial_value;
  BigNat factorial_value;
  bool holds() const noexcept { return divides_bigint && divides_valuation; }
  bool oracles_agree() const noexcept { return divides_bigint == divides_valuation; }
};

/// Requires sum(ks) = N*M, every k_i < N, and N > M >= max(ks).
AlaCheck check_ala(std::uint64_t big_n, std::uint64_t big_m, std::span<const std::uint64_t> ks);

/// Same two-way divisibility test with only sum(ks) = N*M enforced. Used to
/// probe what happens once M >= max(ks) is dropped.
AlaCheck ala_divisibility(std::uint64_t big_n, std::uint64_t big_m,
                          std::span<const std::uint64_t> ks);

struct AlaCounterexample {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> ks;
};

/// Enumerates N <= max_n, 1 <= M < N, and partitions of N*M into parts < N
/// whose largest part exceeds M; returns those where N! fails to divide.
std::vector<AlaCounterexample> search_ala_counterexamples(std::uint64_t max_n);

/// All partitions (non-increasing part lists) of total into parts in [1, max_part].
std::vector<std::vector<std::uint64_t>> partitions(std::uint64_t total, std::uint64_t max_part);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace vsft
