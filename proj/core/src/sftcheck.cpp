#include "vsft/sftcheck.hpp"

#include "vsft/errors.hpp"

#include <algorithm>

namespace vsft {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::RefutedWithWitness: return "RefutedWithWitness";
    case Verdict::InconclusiveAtTruncation: return "InconclusiveAtTruncation";
    case Verdict::RefutedFamily: return "RefutedFamily";
    case Verdict::VacuouslyTrue: return "VacuouslyTrue";
    case Verdict::PreconditionFailed: return "PreconditionFailed";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::FrobeniusCharP: return "FrobeniusCharP";
    case CertificateKind::DiagonalDominanceChar0: return "DiagonalDominanceChar0";
    case CertificateKind::ExhaustiveFinite: return "ExhaustiveFinite";
    case CertificateKind::SampledOnly: return "SampledOnly";
  }
  return "?";
}

SftData make_sft_data(const MonomialIdeal& ideal, const MonomialIdeal& sub, std::uint64_t index) {
  if (index == 0) throw PreconditionViolated("SFT data needs index n >= 1");
  if (!ideal.context() || !sub.context() || !(*ideal.context() == *sub.context()))
    throw PreconditionViolated("SFT data ideals live in different rings");
  if (!ideal_contains(ideal, sub)) throw PreconditionViolated("SFT data needs the sub-ideal inside the ideal");
  return SftData{ideal, sub, index};
}

SftData make_sft_data(const RingModel& model, const std::string& ideal, const std::string& sub, std::uint64_t index) {
  return make_sft_data(model.ideal(ideal), model.ideal(sub), index);
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (p < 2 || n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t exponent_of(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

VerificationReport start(const RingModel& model, const std::string& check) {
  VerificationReport r;
  r.check = check;
  r.truncation = model.params;
  return r;
}

std::string render_product(const RingModel& model, const std::vector<ExponentVector>& gens,
                           const std::vector<std::size_t>& factors) {
  if (factors.size() == 1) return model.render(gens[factors[0]]);
  std::string out;
  for (auto i : factors) out += "(" + model.render(gens[i]) + ")";
  return out;
}

Witness product_witness(const RingModel& model, const std::vector<ExponentVector>& gens, const ProductWitness& pw) {
  Witness w;
  w.k = pw.factors.size();
  w.factors = pw.factors;
  w.exponent = pw.product;
  w.rendered = render_product(model, gens, pw.factors);
  return w;
}

Witness element_witness(const PolyElement& f, std::uint64_t power) {
  Witness w;
  w.k = power;
  w.rendered = "(" + f.to_string() + ")^" + std::to_string(power);
  return w;
}

std::vector<ExponentVector> embed_all(const std::vector<ExponentVector>& gens, std::size_t dim) {
  std::vector<ExponentVector> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.embedded(dim));
  return out;
}

}  // namespace

VerificationReport verify_sft_generators(const RingModel& model, const SftData& data) {
  auto r = start(model, "sft_generators");
  const auto& gens = data.ideal.generators();
  const auto n = static_cast<std::int64_t>(data.index);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const ExponentVector gn = scalar_multiple(gens[i], n);
    if (!ideal_member(data.sub, gn)) {
      r.verdict = Verdict::RefutedWithWitness;
      Witness w;
      w.k = data.index;
      w.factors = {i};
      w.exponent = gn;
      w.rendered = "(" + model.render(gens[i]) + ")^" + std::to_string(n) + " = " + model.render(gn);
      r.witnesses.push_back(std::move(w));
      return r;
    }
  }
  r.verdict = Verdict::Verified;
  return r;
}

VerificationReport certify_sft_all_elements(const RingModel& model, const SftData& data, const CheckOptions& opts) {
  auto r = verify_sft_generators(model, data);
  r.check = "sft_all_elements";
  if (r.verdict != Verdict::Verified) return r;

  const std::uint64_t p = model.characteristic().value();
  const std::uint64_t n = data.index;
  Certificate cert;
  if (p > 0 && is_power_of(n, p)) {
    cert.kind = CertificateKind::FrobeniusCharP;
    cert.parameters = {{"p", std::to_string(p)}, {"k", std::to_string(exponent_of(n, p))}};
    r.certificate = cert;
    return r;
  }
  if (p == 0 && n == 2 && model.two && ideal_member(data.sub, *model.two)) {
    cert.kind = CertificateKind::DiagonalDominanceChar0;
    cert.parameters = {{"two", model.render(*model.two)}};
    r.certificate = cert;
    return r;
  }
  if (model.finite && p > 0) {
    std::vector<ExponentVector> monos;
    for (const auto& e : model.finite_monomials())
      if (ideal_member(data.ideal, e)) monos.push_back(e);
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < monos.size() && small; ++i) {
      count *= p;
      small = count <= opts.max_enumeration;
    }
    if (small) {
      std::vector<std::uint64_t> coeff(monos.size(), 0);
      for (std::uint64_t e = 0; e < count; ++e) {
        std::uint64_t rest = e;
        PolyElement f(model.ring);
        for (std::size_t i = 0; i < monos.size(); ++i) {
          const std::uint64_t c = rest % p;
          rest /= p;
          if (c) f += PolyElement::monomial(model.ring, monos[i], BigInt(c));
        }
        if (f.is_zero()) continue;
        if (!element_in_ideal(element_power(f, n), data.sub)) {
          r.verdict = Verdict::RefutedWithWitness;
          r.witnesses.push_back(element_witness(f, n));
          return r;
        }
      }
      cert.kind = CertificateKind::ExhaustiveFinite;
      cert.parameters = {{"elements", std::to_string(count)}};
      r.certificate = cert;
      return r;
    }
  }
  r.samples = opts.samples;
  r.seed = opts.seed;
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    const PolyElement f = random_element(model.ring, data.ideal, opts.seed + s);
    if (f.is_zero()) continue;
    if (!element_in_ideal(element_power(f, n), data.sub)) {
      r.verdict = Verdict::RefutedWithWitness;
      r.witnesses.push_back(element_witness(f, n));
      return r;
    }
  }
  cert.kind = CertificateKind::SampledOnly;
  cert.parameters = {{"samples", std::to_string(opts.samples)}, {"seed", std::to_string(opts.seed)}};
  r.certificate = cert;
  r.qualifier = "on samples";
  return r;
}

VerificationReport verify_vsft(const RingModel& model, const SftData& data, const CheckOptions& opts) {
  auto r = start(model, "vsft");
  const auto& gens = data.ideal.generators();
  auto w = lex_least_product_outside(gens, data.index, data.sub, false, opts.products);
  if (w) {
    r.verdict = Verdict::RefutedWithWitness;
    r.witnesses.push_back(product_witness(model, gens, *w));
  } else {
    r.verdict = Verdict::Verified;
  }
  return r;
}

std::optional<ProductWitness> find_vsft_witness(const MonomialIdeal& ideal, const MonomialIdeal& sub, std::uint64_t k,
                                                const ProductBudget& budget) {
  if (k == 0) throw PreconditionViolated("witness search needs k >= 1");
  if (k > ideal.generators().size())
    throw PreconditionViolated("truncation too small: k = " + std::to_string(k) + " exceeds the " +
                               std::to_string(ideal.generators().size()) + " available generators");
  return lex_least_product_outside(ideal.generators(), k, sub, true, budget);
}

VerificationReport vsft_witness_family(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                       std::uint64_t kmin, std::uint64_t kmax, const CheckOptions& opts) {
  auto r = start(model, "vsft_witnesses");
  if (kmin == 0 || kmax < kmin) throw PreconditionViolated("witness family needs 1 <= kmin <= kmax");
  const auto& gens = ideal.generators();
  std::size_t found = 0;
  bool pattern_ok = model.witness_pattern.has_value();
  if (pattern_ok) {
    const auto& pat = *model.witness_pattern;
    pattern_ok = model.ideals.count(pat.ideal) && model.ideal(pat.ideal).generators() == gens &&
                 pat.generator_indices.size() >= kmax;
  }
  for (std::uint64_t k = kmin; k <= kmax; ++k) {
    auto w = find_vsft_witness(ideal, sub, k, opts.products);
    if (!w) {
      pattern_ok = false;
      continue;
    }
    ++found;
    if (pattern_ok) {
      const auto& idx = model.witness_pattern->generator_indices;
      pattern_ok = std::equal(w->factors.begin(), w->factors.end(), idx.begin(), idx.begin() + static_cast<long>(k));
    }
    r.witnesses.push_back(product_witness(model, gens, *w));
  }
  if (found == 0) {
    r.verdict = Verdict::Verified;
    r.qualifier = "no witness for k in [" + std::to_string(kmin) + ", " + std::to_string(kmax) + "]";
  } else if (pattern_ok) {
    r.verdict = Verdict::RefutedFamily;
    r.details["pattern"] = model.witness_pattern->description;
  } else {
    r.verdict = Verdict::RefutedWithWitness;
  }
  return r;
}

VerificationReport check_radical_equal(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                       std::uint64_t kmax) {
  auto r = start(model, "radical_equal");
  if (!ideal_contains(ideal, sub)) {
    r.verdict = Verdict::RefutedWithWitness;
    for (std::size_t i = 0; i < sub.generators().size(); ++i)
      if (!ideal_member(ideal, sub.generators()[i])) {
        Witness w;
        w.factors = {i};
        w.exponent = sub.generators()[i];
        w.rendered = model.render(sub.generators()[i]) + " lies outside the ideal";
        r.witnesses.push_back(std::move(w));
        break;
      }
    return r;
  }
  std::uint64_t worst = 1;
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto b = radical_member(sub, gens[i], kmax);
    if (b.status == BoundedStatus::Verified) {
      worst = std::max(worst, b.index);
      continue;
    }
    if (b.status == BoundedStatus::Refuted) {
      r.verdict = Verdict::RefutedWithWitness;
      Witness w;
      w.factors = {i};
      w.exponent = gens[i];
      w.rendered = model.render(gens[i]) + " has no power in the sub-ideal";
      r.witnesses.push_back(std::move(w));
    } else {
      r.verdict = Verdict::InconclusiveAtTruncation;
      r.note = model.render(gens[i]) + ": " + b.note;
    }
    return r;
  }
  r.verdict = Verdict::Verified;
  r.index = worst;
  return r;
}

VerificationReport minimal_vsft_index(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                      std::uint64_t cap, const CheckOptions& opts) {
  auto rad = check_radical_equal(model, ideal, sub, cap);
  if (rad.verdict != Verdict::Verified) {
    rad.check = "minimal_vsft_index";
    if (rad.verdict == Verdict::RefutedWithWitness) {
      rad.verdict = Verdict::PreconditionFailed;
      rad.note = "needs B in I in rad(B)";
    }
    return rad;
  }
  auto r = start(model, "minimal_vsft_index");
  const auto b = least_power_inside(ideal.minimalized().generators(), sub, cap, opts.products);
  if (b.status == BoundedStatus::Verified) {
    r.verdict = Verdict::Verified;
    r.index = b.index;
  } else {
    r.verdict = Verdict::InconclusiveAtTruncation;
    r.note = b.note;
  }
  return r;
}

VerificationReport check_nilpotency(const RingModel& model, const MonomialIdeal& ideal, const MonomialIdeal& sub,
                                    std::uint64_t mmax, const CheckOptions& opts) {
  auto r = start(model, "nilpotency");
  const auto b = nilpotency_index(ideal, sub, mmax, opts.products);
  if (b.status == BoundedStatus::Verified) {
    r.verdict = Verdict::Verified;
    r.index = b.index;
  } else {
    r.verdict = Verdict::InconclusiveAtTruncation;
    r.note = b.note;
  }
  return r;
}

VerificationReport check_power_data(const RingModel& model, const SftData& data, std::uint64_t m, PowerMode mode,
                                    const CheckOptions& opts) {
  if (m == 0) throw PreconditionViolated("power data needs m >= 1");
  auto base = mode == PowerMode::Vsft ? verify_vsft(model, data, opts) : verify_sft_generators(model, data);
  auto r = start(model, "power_data");
  r.details["mode"] = mode == PowerMode::Vsft ? "vsft" : "sft";
  r.details["m"] = std::to_string(m);
  if (base.verdict != Verdict::Verified) {
    r.verdict = Verdict::PreconditionFailed;
    r.note = "base data is not " + r.details["mode"];
    return r;
  }
  const auto im = ideal_power(data.ideal, m, opts.products);
  const auto bm = data.sub.is_zero_ideal() ? data.sub : ideal_power(data.sub, m, opts.products);
  const auto& gens = im.generators();
  r.details["power_generators"] = std::to_string(gens.size());
  if (mode == PowerMode::Vsft) {
    r.details["index"] = std::to_string(data.index);
    auto w = lex_least_product_outside(gens, data.index, bm, false, opts.products);
    if (w) {
      r.verdict = Verdict::RefutedWithWitness;
      r.witnesses.push_back(product_witness(model, gens, *w));
      return r;
    }
  } else {
    const auto e = static_cast<std::int64_t>(m * data.index);
    r.details["index"] = std::to_string(e);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto ge = scalar_multiple(gens[i], e);
      if (!ideal_member(bm, ge)) {
        r.verdict = Verdict::RefutedWithWitness;
        Witness w;
        w.k = static_cast<std::uint64_t>(e);
        w.factors = {i};
        w.exponent = ge;
        w.rendered = "(" + model.render(gens[i]) + ")^" + std::to_string(e);
        r.witnesses.push_back(std::move(w));
        return r;
      }
    }
  }
  r.verdict = Verdict::Verified;
  return r;
}

VerificationReport modified_radical_power_index(const RingModel& model, const MonomialIdeal& ideal,
                                                const SftData& j_data, std::uint64_t kmax,
                                                const CheckOptions& opts) {
  auto r = start(model, "modified_radical_power");
  const auto& j = j_data.ideal;
  const auto& b = j_data.sub;
  auto fail = [&](const std::string& why) {
    r.verdict = Verdict::PreconditionFailed;
    r.note = why;
    return r;
  };
  if (!ideal_contains(j, ideal)) return fail("I is not contained in J");
  for (const auto& g : j.generators()) {
    const auto rm = radical_member(ideal, g, kmax);
    if (rm.status == BoundedStatus::Refuted) return fail(model.render(g) + " is not in rad(I)");
    if (rm.status == BoundedStatus::Inconclusive) {
      r.verdict = Verdict::InconclusiveAtTruncation;
      r.note = model.render(g) + " has no power in I up to " + std::to_string(kmax);
      return r;
    }
  }
  if (verify_vsft(model, j_data, opts).verdict != Verdict::Verified) return fail("(J, B, n) is not VSFT data");

  const auto k = least_power_inside(j.minimalized().generators(), ideal, kmax, opts.products);
  if (k.status != BoundedStatus::Verified) {
    r.verdict = Verdict::InconclusiveAtTruncation;
    r.note = "J^k in I: " + k.note;
    return r;
  }
  r.index = k.index;
  const auto m = least_power_inside(b.minimalized().generators(), ideal, kmax, opts.products);
  if (m.status != BoundedStatus::Verified) {
    r.verdict = Verdict::InconclusiveAtTruncation;
    r.note = "B^m in I: " + m.note;
    return r;
  }
  const std::uint64_t derived = j_data.index * m.index;
  r.details["m"] = std::to_string(m.index);
  r.details["derived_index"] = std::to_string(derived);
  const auto bm = b.is_zero_ideal() ? b : ideal_power(b, m.index, opts.products);
  const auto base = ideal.minimalized();
  auto w = lex_least_product_outside(base.generators(), derived, bm, false, opts.products);
  if (w) {
    r.verdict = Verdict::RefutedWithWitness;
    r.witnesses.push_back(product_witness(model, base.generators(), *w));
    return r;
  }
  r.verdict = Verdict::Verified;
  return r;
}

VerificationReport check_extension_vsft(const RingModel& model, const SftData& data, std::uint64_t degree,
                                        std::uint64_t samples, const CheckOptions& opts) {
  auto base = verify_vsft(model, data, opts);
  if (base.verdict != Verdict::Verified) {
    auto r = start(model, "extension_vsft");
    r.verdict = Verdict::PreconditionFailed;
    r.note = "base data is not VSFT";
    return r;
  }
  if (degree == 0) {
    base.check = "extension_vsft";
    base.details["degree"] = "0";
    return base;
  }
  auto r = start(model, "extension_vsft");
  r.details["degree"] = std::to_string(degree);
  const RingModel t = model.extended("t");
  const std::size_t d = t.context()->dim();
  const std::size_t t_axis = d - 1;
  std::vector<ExponentVector> gens;
  for (const auto& g : embed_all(data.ideal.generators(), d))
    for (std::uint64_t j = 0; j <= degree; ++j) {
      ExponentVector e = g;
      e.set(t_axis, Rational(static_cast<std::int64_t>(j)));
      gens.push_back(std::move(e));
    }
  const MonomialIdeal it(t.context(), gens);
  const MonomialIdeal bt(t.context(), embed_all(data.sub.generators(), d));
  auto w = lex_least_product_outside(it.generators(), data.index, bt, false, opts.products);
  if (w) {
    r.verdict = Verdict::RefutedWithWitness;
    r.witnesses.push_back(product_witness(t, it.generators(), *w));
    return r;
  }
  r.samples = samples;
  r.seed = opts.seed;
  const MonomialIdeal ie(t.context(), embed_all(data.ideal.generators(), d));
  RandomElementOptions ro;
  ro.t_axis = t_axis;
  ro.t_degree = degree;
  for (std::uint64_t s = 0; s < samples; ++s) {
    PolyElement prod = PolyElement::constant(t.ring, 1);
    for (std::uint64_t i = 0; i < data.index; ++i)
      prod = element_multiply(prod, random_element(t.ring, ie, opts.seed + s * data.index + i, ro));
    if (!element_in_ideal(prod, bt)) {
      r.verdict = Verdict::RefutedWithWitness;
      Witness wit;
      wit.k = data.index;
      wit.rendered = prod.to_string();
      r.witnesses.push_back(std::move(wit));
      return r;
    }
  }
  r.details["generator_products"] = "exhaustive";
  r.verdict = Verdict::Verified;
  return r;
}

VerificationReport check_sft_extension_exponent(const RingModel& model, const SftData& data, std::uint64_t degree,
                                                std::uint64_t samples, const CheckOptions& opts) {
  auto r = start(model, "sft_extension_exponent");
  const auto cert = certify_sft_all_elements(model, data, opts);
  if (cert.verdict != Verdict::Verified || !cert.certificate ||
      cert.certificate->kind == CertificateKind::SampledOnly) {
    r.verdict = Verdict::PreconditionFailed;
    r.note = "base SFT data lacks a certificate";
    return r;
  }
  const std::uint64_t n = data.index;
  const std::uint64_t e = n == 1 ? 1 : n * (n - 1);
  r.details["exponent"] = std::to_string(e);
  r.details["degree"] = std::to_string(degree);
  r.samples = samples;
  r.seed = opts.seed;

  const RingModel t = model.extended("t");
  const std::size_t d = t.context()->dim();
  const MonomialIdeal ie(t.context(), embed_all(data.ideal.generators(), d));
  const MonomialIdeal bt(t.context(), embed_all(data.sub.generators(), d));
  RandomElementOptions ro;
  ro.t_axis = d - 1;
  ro.t_degree = degree;
  std::uint64_t least_all = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const PolyElement g = random_element(t.ring, ie, opts.seed + s, ro);
    PolyElement pw = g;
    std::uint64_t least = 0;
    for (std::uint64_t k = 1; k <= e; ++k) {
      if (k > 1) pw = element_multiply(pw, g);
      if (element_in_ideal(pw, bt)) {
        least = k;
        break;
      }
    }
    if (least == 0) {
      r.verdict = Verdict::RefutedWithWitness;
      r.witnesses.push_back(element_witness(g, e));
      return r;
    }
    least_all = std::max(least_all, least);
  }
  r.details["least_passing_exponent"] = std::to_string(least_all);
  r.index = e;
  r.verdict = Verdict::Verified;
  r.qualifier = "on samples";
  return r;
}

VerificationReport strong_convergence_check(const RingModel& model, const SftData& data,
                                            const std::vector<ExponentVector>& elements) {
  auto r = start(model, "strong_convergence");
  const std::uint64_t n = data.index;
  if (elements.size() != n) {
    r.verdict = Verdict::PreconditionFailed;
    r.note = "needs exactly N = " + std::to_string(n) + " elements";
    return r;
  }
  for (const auto& a : elements)
    if (!ideal_member(data.ideal, a)) {
      r.verdict = Verdict::PreconditionFailed;
      r.note = model.render(a) + " is not in the ideal";
      return r;
    }
  if (verify_sft_generators(model, data).verdict != Verdict::Verified) {
    r.verdict = Verdict::PreconditionFailed;
    r.note = "base data is not SFT on generators";
    return r;
  }
  const std::uint64_t p = model.characteristic().value();
  if (p > 0 && p <= n) {
    r.verdict = Verdict::VacuouslyTrue;
    r.note = "N! = 0 in characteristic " + std::to_string(p);
    return r;
  }
  PolyElement prod = PolyElement::constant(model.ring, 1);
  for (const auto& a : elements) prod = element_multiply(prod, PolyElement::monomial(model.ring, a));
  const BigInt nf = factorial(n);
  const PolyElement scaled = prod.scaled(nf);
  r.details["factorial"] = nf.str();
  r.details["product"] = prod.to_string();
  r.details["bare_product_in_sub"] = element_in_ideal(prod, data.sub) ? "true" : "false";
  if (element_in_ideal(scaled, data.sub)) {
    r.verdict = Verdict::Verified;
  } else {
    r.verdict = Verdict::RefutedWithWitness;
    Witness w;
    w.k = n;
    w.rendered = scaled.to_string();
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

VerificationReport check_quotient_pushforward(const RingModel& model, const SftData& data,
                                              const std::vector<ExponentVector>& kernel, const CheckOptions& opts) {
  PowerMode mode = PowerMode::Vsft;
  if (verify_vsft(model, data, opts).verdict != Verdict::Verified) {
    mode = PowerMode::Sft;
    if (verify_sft_generators(model, data).verdict != Verdict::Verified) {
      auto r = start(model, "quotient_pushforward");
      r.verdict = Verdict::PreconditionFailed;
      r.note = "source data is neither VSFT nor SFT on generators";
      return r;
    }
  }
  const RingModel q = model.quotient(kernel);
  const SftData image{MonomialIdeal(q.context(), data.ideal.generators()),
                      MonomialIdeal(q.context(), data.sub.generators()), data.index};
  auto r = mode == PowerMode::Vsft ? verify_vsft(q, image, opts) : verify_sft_generators(q, image);
  r.check = "quotient_pushforward";
  r.truncation = model.params;
  r.details["mode"] = mode == PowerMode::Vsft ? "vsft" : "sft";
  r.details["kernel_generators"] = std::to_string(kernel.size());
  return r;
}

VerificationReport non_sft_witnesses(const RingModel& model, const MonomialIdeal& ideal,
                                     const std::vector<Rational>& candidates, std::uint64_t nmax) {
  auto r = start(model, "non_sft_witnesses");
  if (model.context()->dim() != 1) throw UnsupportedModel("non-SFT witnesses need a rank-1 model");
  if (candidates.empty() || nmax == 0) throw PreconditionViolated("need candidates and nmax >= 1");
  for (const auto& a : candidates) {
    if (a.sign() <= 0) throw PreconditionViolated("candidate exponent must be positive");
    const ExponentVector ea = ExponentVector::from_dense(std::vector<Rational>{a});
    const MonomialIdeal cand(model.context(), {ea});
    for (std::uint64_t n = 1; n <= nmax; ++n) {
      const Rational wv = a / Rational(static_cast<std::int64_t>(n + 1));
      const ExponentVector w = ExponentVector::from_dense(std::vector<Rational>{wv});
      const ExponentVector wn = scalar_multiple(w, static_cast<std::int64_t>(n));
      if (!model.context()->in_monoid(w) || !ideal_member(ideal, w) || ideal_member(cand, wn)) {
        r.verdict = Verdict::InconclusiveAtTruncation;
        r.note = "no witness for candidate " + model.render(ea) + " at n = " + std::to_string(n);
        return r;
      }
      Witness wit;
      wit.k = n;
      wit.exponent = w;
      wit.rendered = "B = (" + model.render(ea) + "), n = " + std::to_string(n) + ": (" + model.render(w) + ")^" +
                     std::to_string(n) + " = " + model.render(wn);
      r.witnesses.push_back(std::move(wit));
    }
  }
  r.verdict = Verdict::RefutedFamily;
  return r;
}

namespace {

VerificationReport run_index_table(const RingModel& model, const CatalogClaim& c, const CheckOptions& opts) {
  auto r = start(model, "index_table");
  if (c.vary.empty() || c.vary_to < c.vary_from) throw PreconditionViolated("index table needs vary and from <= to");
  r.details["vary"] = c.vary;
  r.details["mode"] = c.mode;
  bool inconclusive = false;
  for (std::int64_t v = c.vary_from; v <= c.vary_to; ++v) {
    auto params = model.params;
    params[c.vary] = v;
    const RingModel mv = make_catalog_model(model.name, params).with_budget(model.context()->budget());
    const auto row = minimal_vsft_index(mv, mv.ideal(c.ideal), mv.ideal(c.sub_ideal),
                                        static_cast<std::uint64_t>(c.kmax), opts);
    if (row.verdict == Verdict::Verified) {
      r.table.emplace_back(v, row.index);
    } else {
      r.table.emplace_back(v, std::nullopt);
      inconclusive = true;
      if (row.verdict == Verdict::PreconditionFailed) {
        r.verdict = Verdict::PreconditionFailed;
        r.note = c.vary + " = " + std::to_string(v) + ": " + row.note;
        return r;
      }
    }
  }
  if (inconclusive) {
    r.verdict = Verdict::InconclusiveAtTruncation;
    r.note = "some rows exceed the index cap " + std::to_string(c.kmax);
    return r;
  }
  auto bad = [&](std::size_t i, const std::string& why) {
    r.verdict = Verdict::RefutedWithWitness;
    Witness w;
    w.rendered = c.vary + " = " + std::to_string(r.table[i].first) + ": " + why;
    r.witnesses.push_back(std::move(w));
    return r;
  };
  if (c.mode == "strictly_increasing") {
    for (std::size_t i = 1; i < r.table.size(); ++i)
      if (*r.table[i].second <= *r.table[i - 1].second)
        return bad(i, "least index " + std::to_string(*r.table[i].second) + " does not exceed the previous row");
  } else if (c.mode == "constant") {
    const std::uint64_t want = c.expect_index ? static_cast<std::uint64_t>(*c.expect_index) : *r.table[0].second;
    for (std::size_t i = 0; i < r.table.size(); ++i)
      if (*r.table[i].second != want)
        return bad(i, "least index " + std::to_string(*r.table[i].second) + " differs from " + std::to_string(want));
    r.index = want;
  } else {
    throw PreconditionViolated("index table mode must be strictly_increasing or constant");
  }
  r.verdict = Verdict::Verified;
  return r;
}

std::uint64_t positive(std::int64_t v, const char* what) {
  if (v <= 0) throw PreconditionViolated(std::string(what) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

VerificationReport dispatch(const RingModel& model, const CatalogClaim& c, const CheckOptions& opts) {
  const std::string& k = c.kind;
  auto data = [&] { return make_sft_data(model, c.ideal, c.sub_ideal, positive(c.index, "index")); };
  if (k == "sft_generators") return verify_sft_generators(model, data());
  if (k == "sft_all_elements") return certify_sft_all_elements(model, data(), opts);
  if (k == "vsft") return verify_vsft(model, data(), opts);
  if (k == "vsft_witnesses")
    return vsft_witness_family(model, model.ideal(c.ideal), model.ideal(c.sub_ideal), positive(c.kmin, "kmin"),
                               positive(c.kmax, "kmax"), opts);
  if (k == "minimal_vsft_index")
    return minimal_vsft_index(model, model.ideal(c.ideal), model.ideal(c.sub_ideal), positive(c.kmax, "kmax"), opts);
  if (k == "index_table") return run_index_table(model, c, opts);
  if (k == "power_data") {
    PowerMode mode = PowerMode::Vsft;
    if (c.mode == "sft")
      mode = PowerMode::Sft;
    else if (c.mode != "vsft")
      throw PreconditionViolated("power_data mode must be vsft or sft");
    return check_power_data(model, data(), positive(c.m, "m"), mode, opts);
  }
  if (k == "radical_equal")
    return check_radical_equal(model, model.ideal(c.ideal), model.ideal(c.sub_ideal), positive(c.kmax, "kmax"));
  if (k == "nilpotency")
    return check_nilpotency(model, model.ideal(c.ideal), model.ideal(c.sub_ideal), positive(c.kmax, "kmax"), opts);
  if (k == "modified_radical_power") {
    const auto jd = make_sft_data(model, c.aux_ideal, c.sub_ideal, positive(c.index, "index"));
    return modified_radical_power_index(model, model.ideal(c.ideal), jd, positive(c.kmax, "kmax"), opts);
  }
  if (k == "extension_vsft") {
    if (c.degree < 0) throw PreconditionViolated("degree must be >= 0");
    return check_extension_vsft(model, data(), static_cast<std::uint64_t>(c.degree), opts.samples, opts);
  }
  if (k == "sft_extension_exponent") {
    if (c.degree < 0) throw PreconditionViolated("degree must be >= 0");
    return check_sft_extension_exponent(model, data(), static_cast<std::uint64_t>(c.degree), opts.samples, opts);
  }
  if (k == "strong_convergence") return strong_convergence_check(model, data(), c.vectors);
  if (k == "quotient_pushforward") return check_quotient_pushforward(model, data(), c.vectors, opts);
  if (k == "non_sft_witnesses")
    return non_sft_witnesses(model, model.ideal(c.ideal), c.values, positive(c.kmax, "kmax"));
  throw PreconditionViolated("unknown claim kind '" + k + "'");
}

}  // namespace

VerificationReport run_claim(const RingModel& model, const CatalogClaim& claim, const CheckOptions& opts) {
  CheckOptions o = opts;
  o.seed = opts.seed + claim.seed;
  if (claim.samples > 0) o.samples = static_cast<std::uint64_t>(claim.samples);
  work_counters() = {};
  VerificationReport r;
  try {
    r = dispatch(model, claim, o);
  } catch (const BudgetExceeded& e) {
    r = start(model, claim.kind);
    r.verdict = Verdict::InconclusiveAtTruncation;
    r.note = "budget '" + e.which() + "' exhausted: " + e.what();
  } catch (const PreconditionViolated& e) {
    r = start(model, claim.kind);
    r.verdict = Verdict::PreconditionFailed;
    r.note = e.what();
  } catch (const CompositionMismatch& e) {
    r = start(model, claim.kind);
    r.verdict = Verdict::PreconditionFailed;
    r.note = e.what();
  } catch (const UnsupportedModel& e) {
    r = start(model, claim.kind);
    r.verdict = Verdict::PreconditionFailed;
    r.note = e.what();
  }
  r.claim_id = claim.id;
  r.check = claim.kind;
  r.truncation = model.params;
  if (r.samples == 0 && r.qualifier == "on samples") r.samples = o.samples;
  r.consumed = work_counters();
  return r;
}

bool matches_expectation(const CatalogClaim& claim, const VerificationReport& report) {
  const std::string& e = claim.expect;
  if (e == "verified") {
    if (report.verdict != Verdict::Verified) return false;
    if (claim.expect_certificate &&
        (!report.certificate || to_string(report.certificate->kind) != *claim.expect_certificate))
      return false;
    if (claim.expect_index &&
        (!report.index || *report.index != static_cast<std::uint64_t>(*claim.expect_index)))
      return false;
    return true;
  }
  if (e == "refuted")
    return report.verdict == Verdict::RefutedWithWitness || report.verdict == Verdict::RefutedFamily;
  if (e == "refuted_family") return report.verdict == Verdict::RefutedFamily;
  if (e == "vacuous") return report.verdict == Verdict::VacuouslyTrue;
  if (e == "inconclusive") return report.verdict == Verdict::InconclusiveAtTruncation;
  if (e == "precondition_failed") return report.verdict == Verdict::PreconditionFailed;
  return false;
}

}  // namespace vsft
