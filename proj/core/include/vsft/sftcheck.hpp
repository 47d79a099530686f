#pragma once

#include "vsft/models.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vsft {

enum class Verdict {
  Verified,
  RefutedWithWitness,
  InconclusiveAtTruncation,
  RefutedFamily,
  VacuouslyTrue,
  PreconditionFailed,
};

enum class CertificateKind { FrobeniusCharP, DiagonalDominanceChar0, ExhaustiveFinite, SampledOnly };

std::string to_string(Verdict v);
std::string to_string(CertificateKind k);

/// (I, B, n): x^n in B for x in I (SFT) or I^n in B (VSFT).
struct SftData {
  MonomialIdeal ideal;
  MonomialIdeal sub;
  std::uint64_t index = 1;
};

/// Checks B in I and n >= 1; throws PreconditionViolated otherwise.
SftData make_sft_data(const MonomialIdeal& ideal, const MonomialIdeal& sub, std::uint64_t index);
SftData make_sft_data(const RingModel& model, const std::string& ideal, const std::string& sub, std::uint64_t index);

struct Certificate {
  CertificateKind kind = CertificateKind::SampledOnly;
  std::map<std::string, std::string> parameters;
};

/// A refutation witness. Monomial witnesses carry the generator indices and the
/// product exponent; element witnesses carry the rendered element.
struct Witness {
  std::uint64_t k = 0;
  std::vector<std::size_t> factors;
  std::optional<ExponentVector> exponent;
  std::string rendered;
};

struct VerificationReport {
  std::string claim_id;
  std::string check;
  Verdict verdict = Verdict::InconclusiveAtTruncation;
  /// "on samples" when the verdict rests on random sampling.
  std::string qualifier;
  std::optional<Certificate> certificate;
  std::vector<Witness> witnesses;
  std::optional<std::uint64_t> index;
  /// (truncation parameter value, least index) rows of an index table.
  std::vector<std::pair<std::int64_t, std::optional<std::uint64_t>>> table;
  std::map<std::string, std::string> details;
  std::map<std::string, std::int64_t> truncation;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  WorkCounters consumed;
  std::string note;
};

struct CheckOptions {
  ProductBudget products;
  std::uint64_t samples = 200;
  std::uint64_t seed = 0;
  /// Largest finite element space enumerated for ExhaustiveFinite.
  std::uint64_t max_enumeration = 1u << 16;
};

VerificationReport verify_sft_generators(const RingModel& model, const SftData& data);
VerificationReport certify_sft_all_elements(const RingModel& model, const SftData& data, const CheckOptions& opts = {});
VerificationReport verify_vsft(const RingModel& model, const SftData& data, const CheckOptions& opts = {});

/// Lexicographically least product of k distinct generators of I outside B.
/// Throws PreconditionViolated when k exceeds the number of generators.
std::optional<ProductWitness> find_vsft_witness(const MonomialIdeal& ideal, const MonomialIdeal& sub, std::uint64_t k,
                                                const ProductBudget& budget = {});
/// Per-k witnesses for kmin..kmax. RefutedFamily when every k has a witness
/// and each matches the model's declared pattern.
VerificationReport vsft_witness_family(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                       std::uint64_t kmin, std::uint64_t kmax, const CheckOptions& opts = {});

/// Least n <= cap with I^n in B, after checking B in I in rad(B).
VerificationReport minimal_vsft_index(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                      std::uint64_t cap, const CheckOptions& opts = {});

/// B in I and every generator of I has a power in B (searched up to kmax).
VerificationReport check_radical_equal(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                       std::uint64_t kmax);
/// Least m <= mmax with I^m in B.
VerificationReport check_nilpotency(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                    std::uint64_t mmax, const CheckOptions& opts = {});

enum class PowerMode { Vsft, Sft };
/// (I^m, B^m, n) for VSFT base data, (I^m, B^m, mn) on generators for SFT.
VerificationReport check_power_data(const RingModel& model, const SftData& data, std::uint64_t m, PowerMode mode,
                                    const CheckOptions& opts = {});

/// I in J in rad(I), (J, B, n) VSFT: least k <= kmax with J^k in I, then the
/// data (I, B^m, nm) with m least such that B^m in I.
VerificationReport modified_radical_power_index(const RingModel& model, const MonomialIdeal& ideal,
                                                const SftData& j_data, std::uint64_t kmax,
                                                const CheckOptions& opts = {});

/// VSFT data pushed to R[t] truncated at t-degree `degree`.
VerificationReport check_extension_vsft(const RingModel& model, const SftData& data, std::uint64_t degree,
                                        std::uint64_t samples, const CheckOptions& opts = {});
/// gamma^(N(N-1)) in B R[t] for random gamma in I R[t]; N = 1 uses exponent 1.
VerificationReport check_sft_extension_exponent(const RingModel& model, const SftData& data, std::uint64_t degree,
                                                std::uint64_t samples, const CheckOptions& opts = {});
/// N! a_1 ... a_N in B for monomial elements a_i of I.
VerificationReport strong_convergence_check(const RingModel& model, const SftData& data,
                                            const std::vector<ExponentVector>& elements);
/// The data (phi(I), phi(B), n) in R / kernel, checked in the source's mode.
VerificationReport check_quotient_pushforward(const RingModel& model, const SftData& data,
                                              const std::vector<ExponentVector>& kernel,
                                              const CheckOptions& opts = {});
/// For each candidate (x^a) and n <= nmax: x^(a/(n+1)) lies in the ideal and
/// its n-th power lies outside (x^a). Rank-1 models only.
VerificationReport non_sft_witnesses(const RingModel& model, const MonomialIdeal& ideal,
                                     const std::vector<Rational>& candidates, std::uint64_t nmax);

/// Runs one claim. Budget overruns become InconclusiveAtTruncation and failed
/// preconditions become PreconditionFailed; neither throws.
VerificationReport run_claim(const RingModel& model, const CatalogClaim& claim, const CheckOptions& opts = {});

/// Whether a report matches the claim's expected verdict, certificate and index.
bool matches_expectation(const CatalogClaim& claim, const VerificationReport& report);

}  // namespace vsft
