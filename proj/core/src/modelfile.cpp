#include "vsft/modelfile.hpp"

#include "vsft/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace vsft {

using Json = nlohmann::ordered_json;

namespace {

// ---- writing ----

Json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

Json vector_json(const ExponentVector& e) {
  Json a = Json::array();
  for (const auto& r : e.dense()) a.push_back(rational_json(r));
  return a;
}

Json vectors_json(const std::vector<ExponentVector>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(vector_json(e));
  return a;
}

Json model_json(const RingModel& m) {
  const auto& ctx = *m.context();
  Json j;
  j["schema"] = kModelSchema;
  j["name"] = m.name;
  j["params"] = Json::object();
  for (const auto& [k, v] : m.params) j["params"][k] = v;
  j["characteristic"] = m.characteristic().value();
  j["axes"] = m.axis_names();
  if (m.ring->two_axis) j["two_axis"] = *m.ring->two_axis;
  j["max_degree"] = rational_json(m.ring->max_degree);
  Json grading = Json::array();
  for (const auto& g : ctx.monoid().grading()) grading.push_back(rational_json(g));
  j["monoid"] = {{"generators", vectors_json(ctx.monoid().generators())}, {"grading", grading}};
  const auto& z = ctx.zero_rule();
  if (!z.empty()) {
    Json zj = Json::object();
    if (z.threshold) {
      zj["threshold"] = *z.threshold;
      zj["threshold_axes"] = z.threshold_axes;
    }
    if (!z.kernel.empty()) zj["kernel"] = vectors_json(z.kernel);
    j["zero"] = zj;
  }
  j["ideals"] = Json::object();
  for (const auto& [k, v] : m.ideals) j["ideals"][k] = vectors_json(v);
  if (m.two) j["two"] = vector_json(*m.two);
  j["finite"] = m.finite;
  if (m.witness_pattern) {
    j["witness_pattern"] = {{"description", m.witness_pattern->description},
                            {"ideal", m.witness_pattern->ideal},
                            {"indices", m.witness_pattern->generator_indices}};
  }
  return j;
}

// ---- reading ----

/// A JSON object cursor that tracks its field path and rejects unknown keys.
class Obj {
 public:
  Obj(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path_ + ": " + what); }
  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  bool has(const std::string& key) const { return j_.contains(key); }
  const Json& get(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) fail("missing field '" + key + "'");
    return *it;
  }
  const Json* opt(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw SchemaError(at(it.key()) + ": unknown field");
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

bool boolean(const Json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected true or false");
  return j.get<bool>();
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(path, std::string("bad rational: ") + e.what());
    }
  }
  bad(path, "expected an integer or a \"p/q\" string");
}

ExponentVector vector_of(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of exponents");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
  return ExponentVector::from_dense(v);
}

std::vector<ExponentVector> vectors_of(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of exponent vectors");
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_of(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::map<std::string, std::int64_t> params_of(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object of integer parameters");
  std::map<std::string, std::int64_t> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = integer(*it, path + "." + it.key());
  return out;
}

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

RingModel model_from(const Json& j, const std::string& path) {
  Obj o(j, path);
  const auto schema = str(o.get("schema"), o.at("schema"));
  if (schema != kModelSchema) o.fail("schema must be \"" + std::string(kModelSchema) + "\", got \"" + schema + "\"");
  if (o.has("catalog")) {
    const auto name = str(o.get("catalog"), o.at("catalog"));
    std::map<std::string, std::int64_t> params;
    if (const Json* p = o.opt("params")) params = params_of(*p, o.at("params"));
    o.finish();
    return guarded(path, [&] { return make_catalog_model(name, params); });
  }

  RingModel m;
  m.name = str(o.get("name"), o.at("name"));
  if (const Json* p = o.opt("params")) m.params = params_of(*p, o.at("params"));
  const auto p = integer(o.get("characteristic"), o.at("characteristic"));
  if (p < 0) bad(o.at("characteristic"), "must be 0 or a prime");

  const Json& axes = o.get("axes");
  if (!axes.is_array()) bad(o.at("axes"), "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < axes.size(); ++i) names.push_back(str(axes[i], o.at("axes") + "[" + std::to_string(i) + "]"));

  Obj mo(o.get("monoid"), o.at("monoid"));
  auto gens = vectors_of(mo.get("generators"), mo.at("generators"));
  const Json& gj = mo.get("grading");
  if (!gj.is_array()) bad(mo.at("grading"), "expected an array");
  std::vector<Rational> grading;
  for (std::size_t i = 0; i < gj.size(); ++i) grading.push_back(rational(gj[i], mo.at("grading") + "[" + std::to_string(i) + "]"));
  mo.finish();
  auto monoid = guarded(o.at("monoid"), [&] { return MonoidPresentation(names.size(), gens, grading); });

  ZeroRule zero;
  if (const Json* zj = o.opt("zero")) {
    Obj zo(*zj, o.at("zero"));
    if (const Json* t = zo.opt("threshold")) {
      zero.threshold = integer(*t, zo.at("threshold"));
      const Json& ax = zo.get("threshold_axes");
      if (!ax.is_array()) bad(zo.at("threshold_axes"), "expected an array");
      for (std::size_t i = 0; i < ax.size(); ++i) {
        const auto a = integer(ax[i], zo.at("threshold_axes") + "[" + std::to_string(i) + "]");
        if (a < 0 || static_cast<std::size_t>(a) >= names.size()) bad(zo.at("threshold_axes"), "axis out of range");
        zero.threshold_axes.push_back(static_cast<std::size_t>(a));
      }
    }
    if (const Json* k = zo.opt("kernel")) zero.kernel = vectors_of(*k, zo.at("kernel"));
    zo.finish();
  }

  auto ring = std::make_shared<ElementRing>();
  ring->context = std::make_shared<const MonomialContext>(std::move(monoid), std::move(zero));
  ring->characteristic = guarded(o.at("characteristic"), [&] { return PrimeChar(static_cast<std::uint64_t>(p)); });
  ring->axis_names = names;
  if (const Json* t = o.opt("two_axis")) {
    const auto a = integer(*t, o.at("two_axis"));
    if (a < 0 || static_cast<std::size_t>(a) >= names.size()) bad(o.at("two_axis"), "axis out of range");
    ring->two_axis = static_cast<std::size_t>(a);
  }
  if (const Json* md = o.opt("max_degree")) ring->max_degree = rational(*md, o.at("max_degree"));
  m.ring = ring;

  Obj io(o.get("ideals"), o.at("ideals"));
  for (auto it = j.at("ideals").begin(); it != j.at("ideals").end(); ++it) {
    const std::string ip = io.at(it.key());
    m.ideals[it.key()] = vectors_of(io.get(it.key()), ip);
    guarded(ip, [&] { return MonomialIdeal(ring->context, m.ideals[it.key()]); });
  }
  io.finish();

  if (const Json* t = o.opt("two")) m.two = vector_of(*t, o.at("two"));
  if (const Json* f = o.opt("finite")) m.finite = boolean(*f, o.at("finite"));
  if (const Json* w = o.opt("witness_pattern")) {
    Obj wo(*w, o.at("witness_pattern"));
    WitnessPattern pat;
    pat.description = str(wo.get("description"), wo.at("description"));
    pat.ideal = str(wo.get("ideal"), wo.at("ideal"));
    const Json& idx = wo.get("indices");
    if (!idx.is_array()) bad(wo.at("indices"), "expected an array");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto v = integer(idx[i], wo.at("indices") + "[" + std::to_string(i) + "]");
      if (v < 0) bad(wo.at("indices"), "negative index");
      pat.generator_indices.push_back(static_cast<std::size_t>(v));
    }
    wo.finish();
    if (!m.ideals.count(pat.ideal)) bad(wo.at("ideal"), "names no declared ideal");
    m.witness_pattern = pat;
  }
  o.finish();
  return m;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw SchemaError("line " + std::to_string(line) + ": " + e.what());
  }
}

const std::set<std::string> kExpectations = {"verified", "refuted", "refuted_family", "vacuous", "inconclusive",
                                             "precondition_failed"};

ClaimRecord claim_from(const Json& j, const std::string& path, const std::filesystem::path& base_dir) {
  Obj o(j, path);
  ClaimRecord rec;
  auto& c = rec.claim;
  c.id = str(o.get("id"), o.at("id"));
  c.kind = str(o.get("kind"), o.at("kind"));

  const Json& mj = o.get("model");
  const std::string mp = o.at("model");
  if (mj.is_object() && mj.contains("file")) {
    Obj fo(mj, mp);
    std::filesystem::path f = str(fo.get("file"), fo.at("file"));
    fo.finish();
    if (f.is_relative()) f = base_dir / f;
    std::string text;
    try {
      text = read_text_file(f);
    } catch (const std::exception& e) {
      bad(mp + ".file", e.what());
    }
    try {
      rec.model.model = model_from(parse_text(text), f.string());
    } catch (const SchemaError& e) {
      bad(mp + ".file", e.what());
    }
  } else if (mj.is_object() && mj.contains("catalog") && !mj.contains("schema")) {
    Obj co(mj, mp);
    rec.model.catalog = str(co.get("catalog"), co.at("catalog"));
    if (const Json* p = co.opt("params")) rec.model.params = params_of(*p, co.at("params"));
    co.finish();
    guarded(mp, [&] { return rec.model.resolve(); });
  } else {
    rec.model.model = model_from(mj, mp);
  }

  auto opt_str = [&](const char* key, std::string& out) {
    if (const Json* v = o.opt(key)) out = str(*v, o.at(key));
  };
  auto opt_int = [&](const char* key, std::int64_t& out) {
    if (const Json* v = o.opt(key)) out = integer(*v, o.at(key));
  };
  opt_str("ideal", c.ideal);
  opt_str("sub_ideal", c.sub_ideal);
  opt_str("aux_ideal", c.aux_ideal);
  opt_str("mode", c.mode);
  opt_str("vary", c.vary);
  opt_int("index", c.index);
  opt_int("m", c.m);
  opt_int("kmin", c.kmin);
  opt_int("kmax", c.kmax);
  opt_int("degree", c.degree);
  opt_int("samples", c.samples);
  opt_int("from", c.vary_from);
  opt_int("to", c.vary_to);
  if (const Json* v = o.opt("seed")) {
    if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0))
      bad(o.at("seed"), "expected a non-negative integer");
    c.seed = v->get<std::uint64_t>();
  }
  if (const Json* v = o.opt("vectors")) c.vectors = vectors_of(*v, o.at("vectors"));
  if (const Json* v = o.opt("values")) {
    if (!v->is_array()) bad(o.at("values"), "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) c.values.push_back(rational((*v)[i], o.at("values") + "[" + std::to_string(i) + "]"));
  }
  if (const Json* v = o.opt("expect")) {
    c.expect = str(*v, o.at("expect"));
    if (!kExpectations.count(c.expect)) bad(o.at("expect"), "unknown expectation '" + c.expect + "'");
  }
  if (const Json* v = o.opt("expect_certificate")) c.expect_certificate = str(*v, o.at("expect_certificate"));
  if (const Json* v = o.opt("expect_index")) c.expect_index = integer(*v, o.at("expect_index"));
  o.finish();
  return rec;
}

Json claim_json(const ClaimRecord& rec) {
  const auto& c = rec.claim;
  Json j;
  j["id"] = c.id;
  if (rec.model.catalog) {
    Json m = {{"catalog", *rec.model.catalog}};
    if (!rec.model.params.empty()) {
      m["params"] = Json::object();
      for (const auto& [k, v] : rec.model.params) m["params"][k] = v;
    }
    j["model"] = m;
  } else if (rec.model.model) {
    j["model"] = model_json(*rec.model.model);
  }
  j["kind"] = c.kind;
  if (!c.ideal.empty()) j["ideal"] = c.ideal;
  if (!c.sub_ideal.empty()) j["sub_ideal"] = c.sub_ideal;
  if (!c.aux_ideal.empty()) j["aux_ideal"] = c.aux_ideal;
  if (c.index) j["index"] = c.index;
  if (c.m) j["m"] = c.m;
  if (c.kmin != 1) j["kmin"] = c.kmin;
  if (c.kmax) j["kmax"] = c.kmax;
  if (c.degree) j["degree"] = c.degree;
  if (c.samples) j["samples"] = c.samples;
  if (c.seed) j["seed"] = c.seed;
  if (!c.mode.empty()) j["mode"] = c.mode;
  if (!c.vary.empty()) {
    j["vary"] = c.vary;
    j["from"] = c.vary_from;
    j["to"] = c.vary_to;
  }
  if (!c.vectors.empty()) j["vectors"] = vectors_json(c.vectors);
  if (!c.values.empty()) {
    Json a = Json::array();
    for (const auto& v : c.values) a.push_back(rational_json(v));
    j["values"] = a;
  }
  j["expect"] = c.expect;
  if (c.expect_certificate) j["expect_certificate"] = *c.expect_certificate;
  if (c.expect_index) j["expect_index"] = *c.expect_index;
  return j;
}

}  // namespace

RingModel ModelSpec::resolve(const std::map<std::string, std::int64_t>& overrides) const {
  if (model) return *model;
  if (!catalog) throw PreconditionViolated("model spec names neither a catalog entry nor a model");
  auto p = params;
  for (const auto& [k, v] : overrides) {
    // Overrides apply only to parameters the catalog entry understands.
    const auto base = make_catalog_model(*catalog, p);
    if (base.params.count(k)) p[k] = v;
  }
  return make_catalog_model(*catalog, p);
}

std::string export_model(const RingModel& model) { return model_json(model).dump(2) + "\n"; }

RingModel import_model(std::string_view text) { return model_from(parse_text(text), "model"); }

std::vector<ClaimRecord> parse_claim_file(std::string_view text, const std::filesystem::path& base_dir) {
  const Json j = parse_text(text);
  Obj o(j, "");
  const auto schema = str(o.get("schema"), "schema");
  if (schema != kClaimSchema) bad("schema", "must be \"" + std::string(kClaimSchema) + "\", got \"" + schema + "\"");
  const Json& cs = o.get("claims");
  if (!cs.is_array()) bad("claims", "expected an array");
  o.finish();
  std::vector<ClaimRecord> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string path = "claims[" + std::to_string(i) + "]";
    out.push_back(claim_from(cs[i], path, base_dir));
    if (!ids.insert(out.back().claim.id).second) bad(path + ".id", "duplicate claim id '" + out.back().claim.id + "'");
  }
  return out;
}

std::string export_claims(const std::vector<ClaimRecord>& records) {
  Json j;
  j["schema"] = kClaimSchema;
  j["claims"] = Json::array();
  for (const auto& r : records) j["claims"].push_back(claim_json(r));
  return j.dump(2) + "\n";
}

std::vector<ClaimRecord> catalog_suite() {
  std::vector<ClaimRecord> out;
  for (const auto& name : catalog_names()) {
    ModelSpec spec;
    spec.catalog = name;
    const RingModel m = make_catalog_model(name);
    for (auto& c : catalog_claims(m)) out.push_back({spec, std::move(c)});
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace vsft
