#include "vsft/arith.hpp"

#include "int128.hpp"

#include "vsft/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vsft {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionViolated("p = " + std::to_string(p) + " is not prime");
}

// floor(a / b) for a >= 0, b > 0.
BigNat floor_div(const BigRat& a, const BigNat& b) {
  return boost::multiprecision::numerator(a) / (boost::multiprecision::denominator(a) * b);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeChar::PrimeChar(std::uint64_t value) : value_(value) {
  if (value != 0 && !is_prime(value))
    throw PreconditionViolated("characteristic " + std::to_string(value) + " is neither 0 nor prime");
}

std::uint64_t padic_valuation(const BigNat& n, std::uint64_t p) {
  if (n <= 0) throw PreconditionViolated("valuation of " + n.str() + " is undefined (need n >= 1)");
  require_prime(p);
  std::uint64_t k = 0;
  BigNat m = n;
  const BigNat bp = p;
  while (m % bp == 0) {
    m /= bp;
    ++k;
  }
  return k;
}

std::uint64_t legendre(const BigRat& x, std::uint64_t p) {
  if (x < 0) throw PreconditionViolated("legendre sum needs a nonnegative argument");
  require_prime(p);
  std::uint64_t total = 0;
  BigNat pk = p;
  while (BigRat(pk) <= x) {
    total += static_cast<std::uint64_t>(floor_div(x, pk));
    pk *= p;
  }
  return total;
}

std::uint64_t legendre(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  std::uint64_t total = 0;
  u128 pk = p;
  while (pk <= n) {
    total += static_cast<std::uint64_t>(n / pk);
    pk *= p;
  }
  return total;
}

BigNat factorial(std::uint64_t n) {
  BigNat r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigNat multinomial(std::uint64_t total, std::span<const std::uint64_t> parts) {
  std::uint64_t sum = 0;
  for (auto k : parts) sum += k;
  if (sum != total)
    throw CompositionMismatch("parts sum to " + std::to_string(sum) + ", expected " + std::to_string(total));
  // Product of binomials C(k_1 + ... + k_i, k_i); each step divides exactly.
  BigNat result = 1;
  std::uint64_t running = 0;
  for (auto k : parts) {
    for (std::uint64_t j = 1; j <= k; ++j) {
      ++running;
      result *= running;
      result /= j;
    }
  }
  return result;
}

FloorCheck check_floor_inequality(const BigRat& big_n, const BigRat& big_m,
                                  std::span<const BigRat> parts, std::uint64_t p) {
  require_prime(p);
  if (!(big_n > big_m)) throw PreconditionViolated("N > M fails");
  if (!parts.empty() && !(big_m >= parts.front())) throw PreconditionViolated("M >= a_1 fails");
  if (parts.empty() && !(big_m > 0)) throw PreconditionViolated("M > 0 fails");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!(parts[i - 1] >= parts[i]))
      throw PreconditionViolated("a_" + std::to_string(i) + " >= a_" + std::to_string(i + 1) + " fails");
  }
  if (!parts.empty() && !(parts.back() > 0)) throw PreconditionViolated("a_m > 0 fails");
  BigRat sum = 0;
  for (const auto& a : parts) sum += a;
  const BigRat nm = big_n * big_m;
  if (sum > nm) throw PreconditionViolated("a_1 + ... + a_m <= NM fails");

  FloorCheck out;
  out.lhs = legendre(nm, p);
  out.rhs = legendre(big_n, p);
  for (const auto& a : parts) out.rhs += legendre(a, p);
  out.holds = out.lhs >= out.rhs;
  return out;
}

AlaCheck ala_divisibility(std::uint64_t big_n, std::uint64_t big_m, std::span<const std::uint64_t> ks) {
  const std::uint64_t total = big_n * big_m;
  AlaCheck out;
  out.multinomial_value = multinomial(total, ks);
  out.factorial_value = factorial(big_n);
  out.divides_bigint = out.multinomial_value % out.factorial_value == 0;

  out.divides_valuation = true;
  for (auto p : primes_up_to(big_n)) {
    std::uint64_t rhs = legendre(total, p);
    std::uint64_t sub = 0;
    for (auto k : ks) sub += legendre(k, p);
    // v_p(multinomial) = f_p(NM) - sum f_p(k_i) >= 0 always.
    if (legendre(big_n, p) > rhs - sub) {
      out.divides_valuation = false;
      break;
    }
  }
  return out;
}

AlaCheck check_ala(std::uint64_t big_n, std::uint64_t big_m, std::span<const std::uint64_t> ks) {
  if (big_n == 0) throw PreconditionViolated("N >= 1 fails");
  if (big_m == 0) throw PreconditionViolated("M >= 1 fails");
  std::uint64_t sum = 0;
  std::uint64_t mx = 0;
  for (auto k : ks) {
    sum += k;
    mx = std::max(mx, k);
  }
  if (sum != big_n * big_m) throw PreconditionViolated("k_1 + ... + k_m = NM fails");
  if (mx >= big_n) throw PreconditionViolated("every k_i < N fails");
  if (!(big_n > big_m)) throw PreconditionViolated("N > M fails");
  if (mx > big_m) throw PreconditionViolated("M >= max k_i fails");
  return ala_divisibility(big_n, big_m, ks);
}

std::vector<std::vector<std::uint64_t>> partitions(std::uint64_t total, std::uint64_t max_part) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto& self, std::uint64_t remaining, std::uint64_t cap) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t k = std::min(cap, remaining); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  if (max_part > 0 || total == 0) rec(rec, total, max_part);
  return out;
}

std::vector<AlaCounterexample> search_ala_counterexamples(std::uint64_t max_n) {
  std::vector<AlaCounterexample> found;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    for (std::uint64_t m = 1; m < n; ++m) {
      for (auto& ks : partitions(n * m, n - 1)) {
        if (ks.front() <= m) continue;
        if (!ala_divisibility(n, m, ks).divides_bigint) found.push_back({n, m, ks});
      }
    }
  }
  return found;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

}  // namespace vsft
