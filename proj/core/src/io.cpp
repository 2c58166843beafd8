#include "tate/io.hpp"

namespace tate {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void expectSchema(const Json& j, const char* schema) {
  const Json& s = member(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema)
    throw FormatError(std::string("expected schema \"") + schema + "\"");
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw FormatError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t index(const Json& j, const char* what) {
  std::int64_t v = integer(j, what);
  if (v < 0)
    throw FormatError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

ProductSpace spaceFromJson(const Json& j, std::optional<std::uint32_t> primeOverride) {
  const Json& dims = member(j, "dims");
  if (!dims.is_array() || dims.empty())
    throw FormatError("\"dims\" must be a nonempty array");
  std::vector<int> n;
  for (const auto& d : dims)
    n.push_back(static_cast<int>(integer(d, "factor dimension")));
  std::uint32_t p = PrimeField::kDefaultPrime;
  if (primeOverride)
    p = *primeOverride;
  else if (j.contains("prime"))
    p = static_cast<std::uint32_t>(integer(j.at("prime"), "prime"));
  try {
    return ProductSpace(std::move(n), PrimeField(p));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void writeSpace(Json& j, const ProductSpace& space) {
  j["dims"] = space.dims();
  j["prime"] = space.field().characteristic();
}

} // namespace

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("JSON parse error: ") + e.what());
  }
}

Json multidegreeToJson(const Multidegree& d) { return d.components(); }

Multidegree multidegreeFromJson(const Json& j) {
  if (!j.is_array())
    throw FormatError("multidegree must be an array of integers");
  std::vector<int> v;
  for (const auto& x : j)
    v.push_back(static_cast<int>(integer(x, "degree entry")));
  return Multidegree(std::move(v));
}

Json polynomialToJson(const SPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exps, c] : p.terms())
    terms.push_back({{"coef", c}, {"exps", exps}});
  return terms;
}

SPolynomial polynomialFromJson(const Json& j, const ProductSpace& space) {
  if (!j.is_array())
    throw FormatError("polynomial must be an array of terms");
  SPolynomial p;
  for (const auto& t : j) {
    Coeff c = space.field().reduce(integer(member(t, "coef"), "coefficient"));
    const Json& e = member(t, "exps");
    if (!e.is_array() || e.size() != space.numVariables())
      throw FormatError("exponent vector has wrong length");
    Exponents exps;
    for (const auto& x : e) {
      std::int64_t v = integer(x, "exponent");
      if (v < 0)
        throw FormatError("negative exponent");
      exps.push_back(static_cast<int>(v));
    }
    try {
      p.addTerm(exps, c, space);
    } catch (const std::invalid_argument& err) {
      throw FormatError(err.what());
    }
  }
  return p;
}

Json exteriorToJson(const ExteriorElement& e, const ProductSpace& space) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < space.numVariables(); ++v)
      if (m & (ExtMask{1} << v))
        vars.push_back(v);
    terms.push_back({{"coef", c}, {"vars", vars}});
  }
  return {{"degree", multidegreeToJson(e.degree())}, {"terms", terms}};
}

ExteriorElement exteriorFromJson(const Json& j, const ProductSpace& space) {
  ExteriorElement e(multidegreeFromJson(member(j, "degree")));
  if (e.degree().size() != space.factors())
    throw FormatError("exterior degree has wrong length");
  for (const auto& t : member(j, "terms")) {
    ExtMask m = 0;
    for (const auto& v : member(t, "vars")) {
      std::size_t k = index(v, "variable index");
      if (k >= space.numVariables())
        throw FormatError("exterior variable out of range");
      m |= ExtMask{1} << k;
    }
    if (!(space.exteriorDegree(m) == e.degree()))
      throw FormatError("exterior term does not have the declared degree");
    e.addTerm(m, space.field().reduce(integer(member(t, "coef"), "coefficient")), space.field());
  }
  return e;
}

Json moduleToJson(const PresentedModule& m) {
  Json j;
  j["schema"] = kModuleSchema;
  writeSpace(j, m.space());
  Json gens = Json::array();
  for (const auto& g : m.generatorDegrees())
    gens.push_back(multidegreeToJson(g));
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& c : m.relationDegrees())
    rels.push_back({{"degree", multidegreeToJson(c)}, {"entries", Json::array()}});
  for (const auto& r : m.relations())
    rels[r.col]["entries"].push_back({{"row", r.row}, {"poly", polynomialToJson(r.poly)}});
  j["relations"] = rels;
  return j;
}

PresentedModule moduleFromJson(const Json& j, std::optional<std::uint32_t> primeOverride) {
  if (!j.is_object())
    throw FormatError("module document must be a JSON object");
  expectSchema(j, kModuleSchema);
  ProductSpace space = spaceFromJson(j, primeOverride);
  std::vector<Multidegree> gens;
  for (const auto& g : member(j, "generators"))
    gens.push_back(multidegreeFromJson(g));
  std::vector<Multidegree> cols;
  std::vector<RelationEntry> rels;
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      std::size_t col = cols.size();
      cols.push_back(multidegreeFromJson(member(r, "degree")));
      for (const auto& e : member(r, "entries"))
        rels.push_back({index(member(e, "row"), "row"), col,
                        polynomialFromJson(member(e, "poly"), space)});
    }
  }
  try {
    return PresentedModule(space, std::move(gens), std::move(cols), std::move(rels));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json complexToJson(const LabeledFreeComplex& c) {
  Json j;
  j["schema"] = kComplexSchema;
  writeSpace(j, c.space());
  j["orientation"] = c.orientation();
  if (c.coverage())
    j["coverage"] = {{"low", multidegreeToJson(c.coverage()->low)},
                     {"high", multidegreeToJson(c.coverage()->high)}};
  Json terms = Json::array();
  for (const auto& [d, summands] : c.terms()) {
    Json labels = Json::array();
    Json padding = Json::array();
    for (const auto& s : summands) {
      labels.push_back(multidegreeToJson(s.label));
      padding.push_back(s.padding);
    }
    terms.push_back({{"index", d}, {"labels", labels}, {"padding", padding}});
  }
  j["terms"] = terms;
  Json diffs = Json::array();
  for (const auto& [d, m] : c.differentials()) {
    Json entries = Json::array();
    for (std::size_t col = 0; col < m.cols(); ++col)
      for (const auto& [row, e] : m.column(col))
        entries.push_back({{"row", row}, {"col", col}, {"value", exteriorToJson(e, c.space())}});
    diffs.push_back({{"index", d}, {"entries", entries}});
  }
  j["differentials"] = diffs;
  return j;
}

LabeledFreeComplex complexFromJson(const Json& j) {
  expectSchema(j, kComplexSchema);
  LabeledFreeComplex c(spaceFromJson(j, std::nullopt));
  if (j.contains("orientation"))
    c.setOrientation(j.at("orientation").get<std::string>());
  if (j.contains("coverage"))
    c.setCoverage({multidegreeFromJson(member(j.at("coverage"), "low")),
                   multidegreeFromJson(member(j.at("coverage"), "high"))});
  try {
    for (const auto& t : member(j, "terms")) {
      const Json& labels = member(t, "labels");
      const Json& padding = member(t, "padding");
      if (labels.size() != padding.size())
        throw FormatError("labels and padding differ in length");
      std::vector<FreeSummand> summands;
      for (std::size_t k = 0; k < labels.size(); ++k)
        summands.push_back({multidegreeFromJson(labels[k]), padding[k].get<bool>()});
      c.setTerm(static_cast<int>(integer(member(t, "index"), "index")), std::move(summands));
    }
    for (const auto& dj : member(j, "differentials")) {
      int d = static_cast<int>(integer(member(dj, "index"), "index"));
      ExteriorMatrix m(c.rank(d + 1), c.rank(d));
      for (const auto& e : member(dj, "entries"))
        m.set(index(member(e, "row"), "row"), index(member(e, "col"), "col"),
              exteriorFromJson(member(e, "value"), c.space()));
      c.setDifferential(d, std::move(m));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  return c;
}

Json bettiToJson(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [key, count] : b.entries)
    entries.push_back({{"index", key.first}, {"row", key.second}, {"count", count}});
  Json labels = Json::array();
  for (const auto& [key, count] : b.perLabel)
    labels.push_back(
        {{"index", key.first}, {"label", multidegreeToJson(key.second)}, {"count", count}});
  return {{"schema", kBettiSchema}, {"entries", entries}, {"labels", labels}};
}

Json cohomologyToJson(const CohomologyTable& t) {
  Json entries = Json::array();
  for (const auto& [a, e] : t.entries)
    entries.push_back({{"a", multidegreeToJson(a)}, {"h", e.coefficients()}});
  return {{"schema", kCohomologySchema},
          {"low", multidegreeToJson(t.low)},
          {"high", multidegreeToJson(t.high)},
          {"entries", entries}};
}

CohomologyTable cohomologyFromJson(const Json& j) {
  expectSchema(j, kCohomologySchema);
  CohomologyTable t{multidegreeFromJson(member(j, "low")), multidegreeFromJson(member(j, "high")),
                    {}};
  for (const auto& e : member(j, "entries")) {
    std::vector<std::uint64_t> h;
    for (const auto& x : member(e, "h"))
      h.push_back(static_cast<std::uint64_t>(index(x, "cohomology dimension")));
    t.entries[multidegreeFromJson(member(e, "a"))] = EulerPolynomial(std::move(h));
  }
  return t;
}

Json smoduleComplexToJson(const SModuleComplex& c) {
  Json j;
  j["schema"] = kSModuleComplexSchema;
  writeSpace(j, c.space());
  Json terms = Json::array();
  for (const auto& [d, m] : c.terms())
    terms.push_back({{"index", d}, {"module", moduleToJson(m)}});
  j["terms"] = terms;
  Json diffs = Json::array();
  for (const auto& [d, f] : c.differentials()) {
    Json entries = Json::array();
    for (const auto& [key, p] : f.entries())
      entries.push_back({{"row", key.first}, {"col", key.second}, {"poly", polynomialToJson(p)}});
    diffs.push_back({{"index", d}, {"entries", entries}});
  }
  j["differentials"] = diffs;
  return j;
}

SModuleComplex smoduleComplexFromJson(const Json& j) {
  expectSchema(j, kSModuleComplexSchema);
  SModuleComplex c(spaceFromJson(j, std::nullopt));
  const auto prime = c.space().field().characteristic();
  try {
    for (const auto& t : member(j, "terms"))
      c.setTerm(static_cast<int>(integer(member(t, "index"), "index")),
                moduleFromJson(member(t, "module"), prime));
    for (const auto& dj : member(j, "differentials")) {
      int d = static_cast<int>(integer(member(dj, "index"), "index"));
      const PresentedModule* src = c.term(d);
      const PresentedModule* tgt = c.term(d + 1);
      PolynomialMatrix f(tgt ? tgt->numGenerators() : 0, src ? src->numGenerators() : 0);
      for (const auto& e : member(dj, "entries"))
        f.add(index(member(e, "row"), "row"), index(member(e, "col"), "col"),
              polynomialFromJson(member(e, "poly"), c.space()), c.space());
      c.setDifferential(d, std::move(f));
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  return c;
}

} // namespace tate
