#include "vsft/models.hpp"

#include "vsft/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace vsft {

namespace {

ExponentVector vec(std::initializer_list<Rational> values) {
  const std::vector<Rational> v(values);
  return ExponentVector::from_dense(v);
}

std::vector<std::string> indexed_names(const std::string& stem, std::int64_t n) {
  std::vector<std::string> out;
  for (std::int64_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolated(what);
}

std::shared_ptr<ElementRing> make_ring(MonoidPresentation monoid, ZeroRule zero, std::uint64_t p,
                                       std::vector<std::string> axis_names,
                                       std::optional<std::size_t> two_axis = std::nullopt) {
  auto ring = std::make_shared<ElementRing>();
  ring->context = std::make_shared<const MonomialContext>(std::move(monoid), std::move(zero));
  ring->characteristic = PrimeChar(p);
  ring->two_axis = two_axis;
  ring->axis_names = std::move(axis_names);
  return ring;
}

std::int64_t param(const std::map<std::string, std::int64_t>& params, const std::string& key, std::int64_t fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

CatalogClaim claim(const RingModel& m, const std::string& tag, const std::string& kind, const std::string& ideal,
                   const std::string& sub, std::int64_t index, const std::string& expect = "verified") {
  CatalogClaim c;
  c.id = m.name + "/" + tag;
  c.kind = kind;
  c.ideal = ideal;
  c.sub_ideal = sub;
  c.index = index;
  c.expect = expect;
  return c;
}

CatalogClaim table(const RingModel& m, const std::string& ideal, const std::string& sub, const std::string& vary,
                   std::int64_t from, std::int64_t to, std::int64_t cap, std::optional<std::int64_t> constant) {
  CatalogClaim c = claim(m, "index-table", "index_table", ideal, sub, 0);
  c.vary = vary;
  c.vary_from = from;
  c.vary_to = to;
  c.kmax = cap;
  c.mode = constant ? "constant" : "strictly_increasing";
  c.expect_index = constant;
  return c;
}

}  // namespace

MonomialIdeal RingModel::ideal(const std::string& ideal_name) const {
  auto it = ideals.find(ideal_name);
  if (it == ideals.end()) {
    std::string known;
    for (const auto& [k, _] : ideals) known += (known.empty() ? "" : ", ") + k;
    throw PreconditionViolated("model " + name + " has no ideal '" + ideal_name + "' (known: " + known + ")");
  }
  return MonomialIdeal(ring->context, it->second);
}

RingModel RingModel::extended(const std::string& axis_name) const {
  const std::size_t d = ring->context->dim();
  const std::size_t nd = d + 1;
  ZeroRule zero = ring->context->zero_rule();
  for (auto& k : zero.kernel) k = k.embedded(nd);

  auto r = std::make_shared<ElementRing>(*ring);
  r->context = std::make_shared<const MonomialContext>(ring->context->monoid().with_free_axis(), std::move(zero),
                                                       ring->context->budget());
  r->axis_names.push_back(axis_name);

  RingModel out = *this;
  out.name = name + "[" + axis_name + "]";
  out.ring = r;
  out.finite = false;
  for (auto& [_, gens] : out.ideals)
    for (auto& g : gens) g = g.embedded(nd);
  if (out.two) out.two = out.two->embedded(nd);
  out.witness_pattern.reset();
  return out;
}

RingModel RingModel::with_budget(const SearchBudget& budget, std::optional<Rational> degree_cap) const {
  auto r = std::make_shared<ElementRing>(*ring);
  r->context = std::make_shared<const MonomialContext>(ring->context->monoid(), ring->context->zero_rule(), budget);
  if (degree_cap) r->max_degree = *degree_cap;
  RingModel out = *this;
  out.ring = r;
  return out;
}

RingModel RingModel::quotient(const std::vector<ExponentVector>& kernel) const {
  ZeroRule zero = ring->context->zero_rule();
  for (const auto& k : kernel) {
    require(k.dim() == ring->context->dim(), "kernel generator has wrong dimension: " + k.to_string());
    require(ring->context->in_monoid(k), "kernel generator " + k.to_string() + " is not a monomial of the ring");
    zero.kernel.push_back(k);
  }
  auto r = std::make_shared<ElementRing>(*ring);
  r->context =
      std::make_shared<const MonomialContext>(ring->context->monoid(), std::move(zero), ring->context->budget());
  RingModel out = *this;
  out.name = name + "/(" + std::to_string(kernel.size()) + " kernel generators)";
  out.ring = r;
  out.witness_pattern.reset();
  return out;
}

std::vector<ExponentVector> RingModel::finite_monomials() const {
  require(finite, "model " + name + " is not finite");
  constexpr std::size_t cap = 1u << 16;
  const auto& ctx = *ring->context;
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  std::deque<ExponentVector> queue;
  const ExponentVector zero_vec(ctx.dim());
  seen.insert(zero_vec);
  queue.push_back(zero_vec);
  std::vector<ExponentVector> out;
  while (!queue.empty()) {
    ExponentVector e = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : ctx.monoid().generators()) {
      ExponentVector f = e + g;
      if (ctx.is_zero(f) || !seen.insert(f).second) continue;
      if (seen.size() > cap) throw BudgetExceeded("monomials", "finite model has more than 65536 monomials");
      queue.push_back(f);
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const RingModel& a, const RingModel& b) {
  const auto& ra = *a.ring;
  const auto& rb = *b.ring;
  return a.name == b.name && a.params == b.params && *ra.context == *rb.context &&
         ra.characteristic == rb.characteristic && ra.two_axis == rb.two_axis && ra.max_degree == rb.max_degree &&
         ra.axis_names == rb.axis_names && a.ideals == b.ideals && a.two == b.two &&
         a.witness_pattern == b.witness_pattern && a.finite == b.finite;
}

RingModel frobenius_quotient(std::int64_t p, std::int64_t v) {
  require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "frobenius: p must be prime");
  require(v >= 1, "frobenius: need v >= 1");
  const auto d = static_cast<std::size_t>(v);
  std::vector<ExponentVector> gens;
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < d; ++i) {
    gens.push_back(ExponentVector::unit(d, i));
    axes.push_back(i);
  }
  ZeroRule zero;
  zero.threshold = p;
  zero.threshold_axes = axes;
  RingModel m;
  m.name = "frobenius";
  m.params = {{"p", p}, {"v", v}};
  m.ring = make_ring(MonoidPresentation(d, gens, std::vector<Rational>(d, 1)), zero, static_cast<std::uint64_t>(p),
                     indexed_names("x", v));
  m.ideals["M"] = gens;
  m.ideals["zero"] = {};
  m.finite = true;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  m.witness_pattern = WitnessPattern{"x1*x2*...*xk is a nonzero element of M^k", "M", idx};
  return m;
}

RingModel fraction_monoid(std::int64_t v, std::int64_t big_m) {
  require(v >= 1, "fraction_monoid: need v >= 1");
  require(big_m >= 1, "fraction_monoid: need M >= 1");
  const auto d = static_cast<std::size_t>(v + 1);
  std::vector<ExponentVector> mgens;
  std::vector<Rational> grading(d, 1);
  grading[0] = 2 * big_m + 1;
  const ExponentVector y = ExponentVector::unit(d, 0);
  mgens.push_back(y);
  for (std::size_t i = 1; i < d; ++i) mgens.push_back(ExponentVector::unit(d, i));
  std::vector<ExponentVector> ideal{y};
  std::vector<std::size_t> pattern;
  for (std::size_t i = 1; i < d; ++i) {
    for (std::int64_t k = 1; k <= 2 * big_m; ++k) {
      ExponentVector g = y;
      g.set(i, -k);
      mgens.push_back(g);
      if (k <= big_m) {
        if (k == 1) pattern.push_back(ideal.size());
        ideal.push_back(g);
      }
    }
  }
  std::vector<std::string> names{"y"};
  for (const auto& n : indexed_names("x", v)) names.push_back(n);
  RingModel m;
  m.name = "fraction_monoid";
  m.params = {{"v", v}, {"M", big_m}};
  m.ring = make_ring(MonoidPresentation(d, mgens, grading), {}, 2, names);
  m.ideals["I"] = ideal;
  m.ideals["y"] = {y};
  m.witness_pattern = WitnessPattern{"(y/x1)(y/x2)...(y/xk) lies outside (y)", "I", pattern};
  return m;
}

RingModel int_plus_2x(std::int64_t d) {
  require(d >= 0, "int_plus_2x: need D >= 0");
  std::vector<ExponentVector> mgens;
  const std::int64_t top = std::max<std::int64_t>(8 * d, 1);
  for (std::int64_t k = 0; k <= top; ++k) mgens.push_back(vec({1, k}));
  std::vector<ExponentVector> ideal;
  for (std::int64_t k = 0; k <= d; ++k) ideal.push_back(vec({1, k}));
  RingModel m;
  m.name = "int_plus_2x";
  m.params = {{"D", d}};
  m.ring = make_ring(MonoidPresentation(2, mgens, {1, 1}), {}, 0, {"2", "x"}, 0);
  m.ideals["I"] = ideal;
  m.ideals["2"] = {vec({1, 0})};
  std::vector<ExponentVector> sq;
  for (std::int64_t k = 0; k <= 2 * d; ++k) sq.push_back(vec({2, k}));
  m.ideals["I2"] = sq;
  m.two = vec({1, 0});
  return m;
}

RingModel char2_xy(std::int64_t v, std::int64_t d) {
  require(v >= 1, "char2_xy: need v >= 1");
  require(d >= 1, "char2_xy: need D >= 1");
  const auto dim = static_cast<std::size_t>(v + 1);
  const ExponentVector x2 = ExponentVector::unit(dim, 0, 2);
  std::vector<ExponentVector> mgens{x2};
  std::vector<ExponentVector> ideal{x2};
  std::vector<ExponentVector> squares{scalar_multiple(x2, 2)};
  std::vector<std::size_t> pattern;
  for (std::size_t i = 1; i < dim; ++i) {
    ExponentVector xy = ExponentVector::unit(dim, 0) + ExponentVector::unit(dim, i);
    mgens.push_back(xy);
    mgens.push_back(ExponentVector::unit(dim, i, 2));
    pattern.push_back(ideal.size());
    ideal.push_back(xy);
    squares.push_back(scalar_multiple(xy, 2));
  }
  std::vector<std::string> names{"x"};
  for (const auto& n : indexed_names("y", v)) names.push_back(n);
  RingModel m;
  m.name = "char2_xy";
  m.params = {{"v", v}, {"D", d}};
  auto ring = make_ring(MonoidPresentation(dim, mgens, std::vector<Rational>(dim, 1)), {}, 2, names);
  ring->max_degree = 2 * d;
  m.ring = ring;
  m.ideals["I"] = ideal;
  m.ideals["x2"] = {x2};
  m.ideals["Isq"] = squares;
  m.witness_pattern = WitnessPattern{"(xy1)(xy2)...(xyk) lies outside (x^2)", "I", pattern};
  return m;
}

RingModel dyadic(std::int64_t nmax) {
  require(nmax >= 1 && nmax <= 40, "dyadic: need 1 <= nmax <= 40");
  std::vector<ExponentVector> gens{vec({1})};
  std::vector<std::size_t> pattern;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    pattern.push_back(gens.size());
    gens.push_back(vec({Rational(n) + Rational(1, std::int64_t{1} << n)}));
  }
  RingModel m;
  m.name = "dyadic";
  m.params = {{"nmax", nmax}};
  m.ring = make_ring(MonoidPresentation(1, gens, {1}), {}, 0, {"2"}, 0);
  m.ideals["M"] = gens;
  m.ideals["2"] = {vec({1})};
  m.two = vec({1});
  m.witness_pattern = WitnessPattern{"2^(1+1/2) * ... * 2^(k+1/2^k) lies outside (2)", "M", pattern};
  return m;
}

namespace {

std::int64_t lcm_upto(std::int64_t n) {
  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= n; ++k) l = lcm64(l, k);
  return l;
}

}  // namespace

RingModel rational_valuation(std::int64_t den_bound) {
  require(den_bound >= 1 && den_bound <= 12, "rational_valuation: need 1 <= denBound <= 12");
  const std::int64_t l = lcm_upto(den_bound);
  std::vector<ExponentVector> gens;
  for (std::int64_t k = 0; k < l; ++k) gens.push_back(vec({Rational(1) + Rational(k, l)}));
  RingModel m;
  m.name = "rational_valuation";
  m.params = {{"denBound", den_bound}};
  m.ring = make_ring(MonoidPresentation(1, gens, {1}), {}, 2, {"x"});
  m.ideals["xV"] = gens;
  m.ideals["x"] = {vec({1})};
  return m;
}

RingModel rational_valuation_overring(std::int64_t den_bound) {
  require(den_bound >= 1 && den_bound <= 12, "valuation_overring: need 1 <= denBound <= 12");
  const std::int64_t l = lcm_upto(den_bound);
  RingModel m;
  m.name = "valuation_overring";
  m.params = {{"denBound", den_bound}};
  m.ring = make_ring(MonoidPresentation(1, {vec({Rational(1, l)})}, {1}), {}, 2, {"x"});
  m.ideals["MV"] = {vec({Rational(1, l)})};
  return m;
}

std::vector<std::string> catalog_names() {
  return {"frobenius", "fraction_monoid", "int_plus_2x", "char2_xy", "dyadic", "rational_valuation",
          "valuation_overring"};
}

RingModel make_catalog_model(const std::string& name, const std::map<std::string, std::int64_t>& params) {
  using D = CatalogDefaults;
  auto check_keys = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, _] : params) {
      bool ok = false;
      for (const char* key : keys) ok = ok || k == key;
      require(ok, "model " + name + " has no parameter '" + k + "'");
    }
  };
  if (name == "frobenius") {
    check_keys({"p", "v"});
    return frobenius_quotient(param(params, "p", D::p), param(params, "v", D::v));
  }
  if (name == "fraction_monoid") {
    check_keys({"v", "M"});
    return fraction_monoid(param(params, "v", D::v), param(params, "M", D::M));
  }
  if (name == "int_plus_2x") {
    check_keys({"D"});
    return int_plus_2x(param(params, "D", D::D));
  }
  if (name == "char2_xy") {
    check_keys({"v", "D"});
    return char2_xy(param(params, "v", D::v), param(params, "D", D::D));
  }
  if (name == "dyadic") {
    check_keys({"nmax"});
    return dyadic(param(params, "nmax", D::nmax));
  }
  if (name == "rational_valuation") {
    check_keys({"denBound"});
    return rational_valuation(param(params, "denBound", D::den_bound));
  }
  if (name == "valuation_overring") {
    check_keys({"denBound"});
    return rational_valuation_overring(param(params, "denBound", D::den_bound));
  }
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw PreconditionViolated("unknown example '" + name + "' (available: " + known + ")");
}

std::vector<CatalogClaim> catalog_claims(const RingModel& m) {
  std::vector<CatalogClaim> out;
  auto add = [&](CatalogClaim c) { out.push_back(std::move(c)); };
  const auto p = static_cast<std::int64_t>(m.characteristic().value());

  if (m.name == "frobenius") {
    const std::int64_t v = m.params.at("v");
    const std::int64_t nmin = v * (p - 1) + 1;
    add(claim(m, "sft-generators", "sft_generators", "M", "zero", p));
    auto all = claim(m, "sft-all", "sft_all_elements", "M", "zero", p);
    all.expect_certificate = "FrobeniusCharP";
    all.samples = 200;
    add(all);
    auto w = claim(m, "witnesses", "vsft_witnesses", "M", "zero", 0, "refuted_family");
    w.kmin = 1;
    w.kmax = v;
    add(w);
    add(claim(m, "vsft-index-p", "vsft", "M", "zero", p, v == 1 ? "verified" : "refuted"));
    auto mi = claim(m, "min-index", "minimal_vsft_index", "M", "zero", 0);
    mi.kmax = nmin + 1;
    mi.expect_index = nmin;
    add(mi);
    add(table(m, "M", "zero", "v", 2, 6, 6 * (p - 1) + 2, std::nullopt));
    auto pw = claim(m, "power-sft", "power_data", "M", "zero", p);
    pw.m = 3;
    pw.mode = "sft";
    add(pw);
    auto rad = claim(m, "radical", "radical_equal", "M", "zero", 0);
    rad.kmax = p;
    add(rad);
    auto nil = claim(m, "nilpotency", "nilpotency", "M", "zero", 0);
    nil.kmax = nmin + 1;
    nil.expect_index = nmin;
    add(nil);
    auto ext = claim(m, "sft-extension", "sft_extension_exponent", "M", "zero", p);
    ext.degree = 3;
    ext.samples = 50;
    ext.seed = 7;
    add(ext);
    if (v >= 2) {
      auto q = claim(m, "quotient", "quotient_pushforward", "M", "zero", p);
      q.vectors = {ExponentVector::unit(static_cast<std::size_t>(v), static_cast<std::size_t>(v - 1))};
      add(q);
      auto sc = claim(m, "strong-convergence", "strong_convergence", "M", "zero", p, "vacuous");
      for (std::int64_t i = 0; i < p; ++i)
        sc.vectors.push_back(ExponentVector::unit(static_cast<std::size_t>(v), static_cast<std::size_t>(i % v)));
      add(sc);
    }
  } else if (m.name == "fraction_monoid") {
    const std::int64_t v = m.params.at("v");
    add(claim(m, "sft-generators", "sft_generators", "I", "y", 2));
    auto all = claim(m, "sft-all", "sft_all_elements", "I", "y", 2);
    all.expect_certificate = "FrobeniusCharP";
    all.samples = 200;
    add(all);
    add(claim(m, "vsft-index-2", "vsft", "I", "y", 2, v >= 2 ? "refuted" : "verified"));
    auto w = claim(m, "witnesses", "vsft_witnesses", "I", "y", 0, "refuted_family");
    w.kmin = 1;
    w.kmax = v;
    add(w);
    auto mi = claim(m, "min-index", "minimal_vsft_index", "I", "y", 0);
    mi.kmax = v + 2;
    mi.expect_index = v + 1;
    add(mi);
    add(table(m, "I", "y", "v", 2, 6, 8, std::nullopt));
    auto pw = claim(m, "power-sft", "power_data", "I", "y", 2);
    pw.m = 2;
    pw.mode = "sft";
    add(pw);
    auto rad = claim(m, "radical", "radical_equal", "I", "y", 0);
    rad.kmax = 2;
    add(rad);
  } else if (m.name == "int_plus_2x") {
    const std::int64_t d = m.params.at("D");
    add(claim(m, "vsft", "vsft", "I", "2", 2));
    auto all = claim(m, "sft-all", "sft_all_elements", "I", "2", 2);
    all.expect_certificate = "DiagonalDominanceChar0";
    add(all);
    auto s3 = claim(m, "sft-all-index-3", "sft_all_elements", "I", "2", 3);
    s3.expect_certificate = "SampledOnly";
    s3.samples = 200;
    s3.seed = 11;
    add(s3);
    auto w = claim(m, "no-witnesses", "vsft_witnesses", "I", "2", 0);
    w.kmin = 2;
    w.kmax = 4;
    add(w);
    add(table(m, "I", "2", "D", 2, 6, 4, 2));
    auto pw = claim(m, "power-vsft", "power_data", "I", "2", 2);
    pw.m = 2;
    pw.mode = "vsft";
    add(pw);
    auto rad = claim(m, "radical", "radical_equal", "I", "2", 0);
    rad.kmax = 2;
    add(rad);
    auto nil = claim(m, "nilpotency", "nilpotency", "I", "2", 0);
    nil.kmax = 4;
    nil.expect_index = 2;
    add(nil);
    auto mr = claim(m, "modified-radical", "modified_radical_power", "I2", "2", 2);
    mr.aux_ideal = "I";
    mr.kmax = 4;
    mr.expect_index = 2;
    add(mr);
    auto ext = claim(m, "extension", "extension_vsft", "I", "2", 2);
    ext.degree = 4;
    ext.samples = 20;
    ext.seed = 3;
    add(ext);
    auto sc = claim(m, "strong-convergence", "strong_convergence", "I", "2", 2);
    sc.vectors = {vec({1, 1}), vec({1, 2})};
    add(sc);
    auto q = claim(m, "quotient", "quotient_pushforward", "I", "2", 2);
    q.vectors = {vec({1, d})};
    add(q);
  } else if (m.name == "char2_xy") {
    const std::int64_t v = m.params.at("v");
    add(claim(m, "sft-generators", "sft_generators", "I", "x2", 2));
    auto all = claim(m, "sft-all", "sft_all_elements", "I", "x2", 2);
    all.expect_certificate = "FrobeniusCharP";
    all.samples = 200;
    add(all);
    add(claim(m, "vsft-index-2", "vsft", "I", "x2", 2, "refuted"));
    auto w = claim(m, "witnesses", "vsft_witnesses", "I", "x2", 0, "refuted_family");
    w.kmin = 1;
    w.kmax = v;
    add(w);
    auto mi = claim(m, "min-index", "minimal_vsft_index", "I", "x2", 0);
    mi.kmax = v + 2;
    mi.expect_index = v + 1;
    add(mi);
    add(table(m, "I", "x2", "v", 2, 6, 8, std::nullopt));
    auto rad = claim(m, "radical", "radical_equal", "I", "x2", 0);
    rad.kmax = 2;
    add(rad);
    auto mr = claim(m, "modified-radical", "modified_radical_power", "Isq", "x2", v + 1);
    mr.aux_ideal = "I";
    mr.kmax = 2 * v + 4;
    add(mr);
    auto pw = claim(m, "power-sft", "power_data", "I", "x2", 2);
    pw.m = 2;
    pw.mode = "sft";
    add(pw);
  } else if (m.name == "dyadic") {
    const std::int64_t nmax = m.params.at("nmax");
    add(claim(m, "sft-generators", "sft_generators", "M", "2", 2));
    auto all = claim(m, "sft-all", "sft_all_elements", "M", "2", 2);
    all.expect_certificate = "DiagonalDominanceChar0";
    add(all);
    add(claim(m, "vsft-index-2", "vsft", "M", "2", 2, "refuted"));
    auto w = claim(m, "witnesses", "vsft_witnesses", "M", "2", 0, "refuted_family");
    w.kmin = 2;
    w.kmax = nmax;
    add(w);
    add(table(m, "M", "2", "nmax", 2, 6, 8, std::nullopt));
    auto rad = claim(m, "radical", "radical_equal", "M", "2", 0);
    rad.kmax = 2;
    add(rad);
    auto sc = claim(m, "strong-convergence", "strong_convergence", "M", "2", 2);
    sc.vectors = {vec({Rational(3, 2)}), vec({Rational(9, 4)})};
    add(sc);
    auto pw = claim(m, "power-sft", "power_data", "M", "2", 2);
    pw.m = 2;
    pw.mode = "sft";
    add(pw);
  } else if (m.name == "rational_valuation") {
    add(claim(m, "vsft", "vsft", "xV", "x", 2));
    auto all = claim(m, "sft-all", "sft_all_elements", "xV", "x", 2);
    all.expect_certificate = "FrobeniusCharP";
    all.samples = 200;
    add(all);
    add(table(m, "xV", "x", "denBound", 2, 6, 4, 2));
    auto rad = claim(m, "radical", "radical_equal", "xV", "x", 0);
    rad.kmax = 2;
    add(rad);
    auto pw = claim(m, "power-vsft", "power_data", "xV", "x", 2);
    pw.m = 2;
    pw.mode = "vsft";
    add(pw);
    auto ext = claim(m, "extension", "extension_vsft", "xV", "x", 2);
    ext.degree = 2;
    ext.samples = 20;
    ext.seed = 5;
    add(ext);
  } else if (m.name == "valuation_overring") {
    auto ns = claim(m, "non-sft", "non_sft_witnesses", "MV", "", 0, "refuted_family");
    ns.values = {1, 2, 3};
    ns.kmax = m.params.at("denBound") - 1;
    add(ns);
  }
  return out;
}

}  // namespace vsft
