#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tate/io.hpp"

namespace tate::cli {

namespace {

/// Bad user input; maps to exit 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Job {
  std::string command;
  std::string module;
  std::string low;
  std::string high;
  std::optional<std::uint32_t> prime;
  unsigned parallel = 1;
  std::string out;
  std::string format = "text";
  std::string mode = "full";
  std::string corner;
  std::string anchor;
  std::string factors;
  bool dropPadding = false;
  bool project = false;
  bool noBand = false;
};

std::string readModuleText(const std::string& source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{')
    return source;
  std::ifstream in(source);
  if (!in)
    throw ValidationError("cannot open module file: " + source);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::optional<std::uint32_t> primeFromEnvironment() {
  const char* env = std::getenv("TATE_PRIME");
  if (!env || !*env)
    return std::nullopt;
  std::string s(env);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ValidationError("TATE_PRIME is not a positive integer: " + s);
  return p;
}

// Precedence: --prime, then the document's own "prime", then TATE_PRIME.
PresentedModule loadModule(const Job& job) {
  if (job.module.empty())
    throw ValidationError("--module is required");
  Json doc = parseJson(readModuleText(job.module));
  std::optional<std::uint32_t> prime = job.prime;
  if (!prime && !(doc.is_object() && doc.contains("prime")))
    prime = primeFromEnvironment();
  return moduleFromJson(doc, prime);
}

Multidegree degreeArg(const std::string& text, const char* name, const ProductSpace& space) {
  if (text.empty())
    throw ValidationError(std::string("--") + name + " is required");
  std::vector<int> v;
  try {
    v = parseIntList(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--") + name + ": " + e.what());
  }
  if (v.size() != space.factors())
    throw ValidationError(std::string("--") + name + " needs " + std::to_string(space.factors()) +
                          " components");
  return Multidegree(std::move(v));
}

std::vector<std::size_t> factorArg(const std::string& text, const ProductSpace& space) {
  if (text.empty())
    throw ValidationError("--factors is required");
  std::vector<std::size_t> out;
  try {
    for (int f : parseIntList(text)) {
      if (f < 0)
        throw ValidationError("--factors: negative factor index");
      out.push_back(static_cast<std::size_t>(f));
    }
    validateFactorSet(space, out);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--factors: ") + e.what());
  }
  return out;
}

void checkWindow(const Multidegree& low, const Multidegree& high) {
  if (!leq(low, high))
    throw ValidationError("window is not well ordered: " + low.toString() + " > " +
                          high.toString());
}

TateOptions tateOptions(const Job& job, const ProductSpace& space) {
  TateOptions opts;
  if (job.mode == "box")
    opts.mode = TateOptions::Mode::Box;
  else if (job.mode != "full")
    throw ValidationError("--mode must be full or box");
  opts.threads = job.parallel;
  opts.regularity.threads = job.parallel;
  opts.band = !job.noBand;
  if (!job.corner.empty())
    opts.corner = degreeArg(job.corner, "corner", space);
  return opts;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string complexArtifact(const Job& job, const LabeledFreeComplex& c) {
  if (job.format == "json")
    return dump(complexToJson(c));
  if (job.format == "betti-json")
    return dump(bettiToJson(betti(c)));
  if (job.format != "text")
    throw ValidationError("--format must be text, json or betti-json");
  return renderBetti(betti(c));
}

LabeledFreeComplex dropPadding(const LabeledFreeComplex& c) {
  return c.subquotient([](int, const FreeSummand& s) { return !s.padding; });
}

std::string runTate(const Job& job) {
  PresentedModule m = loadModule(job);
  Multidegree low = degreeArg(job.low, "low", m.space());
  Multidegree high = degreeArg(job.high, "high", m.space());
  checkWindow(low, high);
  LabeledFreeComplex t = tateResolution(m, low, high, tateOptions(job, m.space()));
  return complexArtifact(job, job.dropPadding ? dropPadding(t) : t);
}

std::string renderTable(const CohomologyTable& table) {
  std::ostringstream s;
  for (const auto& [a, e] : table.entries)
    s << a.toString() << ": " << e.toString() << "\n";
  return s.str();
}

std::string runCohomology(const Job& job, std::string format) {
  PresentedModule m = loadModule(job);
  Multidegree low = degreeArg(job.low, "low", m.space());
  Multidegree high = degreeArg(job.high, "high", m.space());
  checkWindow(low, high);
  TateOptions opts = tateOptions(job, m.space());
  opts.mode = TateOptions::Mode::Box;
  CohomologyTable table = eulerPolynomialTable(m, low, high, opts);
  if (format == "json")
    return dump(cohomologyToJson(table));
  if (format == "matrix") {
    if (m.space().factors() != 2)
      throw ValidationError("matrix format needs a product of two projective spaces");
    return cohomologyMatrix(table);
  }
  if (format == "table" || format == "text")
    return renderTable(table);
  throw ValidationError("--format must be table, matrix or json");
}

std::string smoduleArtifact(const Job& job, const SModuleComplex& c) {
  if (job.format == "json")
    return dump(smoduleComplexToJson(c));
  if (job.format != "text")
    throw ValidationError("--format must be text or json");
  return renderSModuleComplex(c);
}

TateOptions monadOptions(const Job& job, const ProductSpace& space) {
  TateOptions opts = tateOptions(job, space);
  opts.mode = TateOptions::Mode::Box;
  return opts;
}

std::string runBeilinson(const Job& job) {
  PresentedModule m = loadModule(job);
  return smoduleArtifact(job, beilinsonMonad(m, monadOptions(job, m.space())));
}

std::string runPushforward(const Job& job) {
  PresentedModule m = loadModule(job);
  auto retained = factorArg(job.factors, m.space());
  return smoduleArtifact(job, directImageComplex(m, retained, monadOptions(job, m.space())));
}

std::string runCorner(const Job& job) {
  PresentedModule m = loadModule(job);
  Multidegree c = degreeArg(job.corner, "corner", m.space());
  Multidegree low = degreeArg(job.low, "low", m.space());
  Multidegree high = degreeArg(job.high, "high", m.space());
  checkWindow(low, high);
  TateOptions opts = tateOptions(job, m.space());
  opts.corner.reset();
  return complexArtifact(job, cornerComplex(m, c, low, high, opts));
}

std::string runStrand(const Job& job) {
  PresentedModule m = loadModule(job);
  Multidegree low = degreeArg(job.low, "low", m.space());
  Multidegree high = degreeArg(job.high, "high", m.space());
  checkWindow(low, high);
  Multidegree anchor = degreeArg(job.anchor, "anchor", m.space());
  auto retained = factorArg(job.factors, m.space());
  LabeledFreeComplex t = tateResolution(m, low, high, tateOptions(job, m.space()));
  LabeledFreeComplex s = strand(job.dropPadding ? dropPadding(t) : t, anchor, retained);
  return complexArtifact(job, job.project ? restrictToFactors(s, retained) : s);
}

// Reports regularity, quadrant exactness and the monad check as one JSON
// document; a failed check exits 3 after writing the report.
std::string runVerify(const Job& job, bool& failed) {
  PresentedModule m = loadModule(job);
  Json report;
  report["schema"] = "tate.verify/1";
  RegularityOptions ropts;
  ropts.threads = job.parallel;
  Multidegree b;
  try {
    b = coarseRegularity(m, ropts);
    report["regularity"] = multidegreeToJson(b);
  } catch (const RegularityError& e) {
    report["regularity"] = nullptr;
    report["regularityError"] = e.what();
    report["pass"] = false;
    failed = true;
    return dump(report);
  }
  QuadrantReport q = verifyQuadrantExactness(m, b, ropts.margin, job.parallel);
  report["quadrant"] = {{"corner", multidegreeToJson(q.corner)},
                        {"margin", q.margin},
                        {"failures", q.failures.size()}};
  SModuleComplex monad = beilinsonMonad(m, monadOptions(job, m.space()));
  // Below the regularity degree H^0 of the monad may differ from M.
  Multidegree low = job.low.empty() ? componentwiseMax(defaultVerificationLow(monad), b)
                                    : degreeArg(job.low, "low", m.space());
  Multidegree high = job.high.empty() ? low + Multidegree(m.space().factors(), 2)
                                      : degreeArg(job.high, "high", m.space());
  checkWindow(low, high);
  MonadReport r = verifyMonad(monad, m, low, high, job.parallel);
  Json mismatches = Json::array();
  for (const auto& x : r.mismatches)
    mismatches.push_back({{"index", x.index},
                          {"degree", multidegreeToJson(x.degree)},
                          {"got", x.got},
                          {"expected", x.expected}});
  report["monad"] = {{"low", multidegreeToJson(r.low)},
                     {"high", multidegreeToJson(r.high)},
                     {"checked", r.checked},
                     {"mismatches", mismatches}};
  bool pass = q.exact() && r.pass();
  report["pass"] = pass;
  failed = !pass;
  return dump(report);
}

void addCommon(CLI::App* sub, Job& job) {
  sub->add_option("--module,-m", job.module, "module JSON file or inline JSON");
  sub->add_option("--prime,-p", job.prime, "field characteristic");
  sub->add_option("--parallel,-j", job.parallel, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out,-o", job.out, "write the artifact here instead of stdout");
}

void addWindow(CLI::App* sub, Job& job) {
  // Strings so that "-3,-3" is not mistaken for a flag.
  sub->add_option("--low", job.low, "window low degree, e.g. -3,-3")->allow_extra_args(false);
  sub->add_option("--high", job.high, "window high degree")->allow_extra_args(false);
}

void addTateFlags(CLI::App* sub, Job& job) {
  sub->add_option("--mode", job.mode, "full or box")->check(CLI::IsMember({"full", "box"}));
  sub->add_flag("--drop-padding", job.dropPadding, "drop summands flagged as padding");
  sub->add_flag("--no-band", job.noBand, "resolve every degree instead of the linear band");
}

Json errorJson(const char* kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

} // namespace

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int v = 0;
    const char* begin = piece.data();
    const char* end = piece.data() + piece.size();
    if (begin != end && *begin == '+')
      ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (piece.empty() || ec != std::errc() || ptr != end)
      throw std::invalid_argument("not a comma-separated integer list: \"" + text + "\"");
    out.push_back(v);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tate resolutions and sheaf cohomology on products of projective spaces",
               "tateprod"};
  app.require_subcommand(1);
  Job job;

  auto* tate = app.add_subcommand("tate", "Tate resolution window as a Betti table or JSON");
  addCommon(tate, job);
  addWindow(tate, job);
  addTateFlags(tate, job);
  tate->add_option("--corner", job.corner, "corner degree (default: regularity heuristic)");
  tate->add_option("--format", job.format, "text, json or betti-json");

  std::string cohomologyFormat = "table";
  auto* cohomology = app.add_subcommand("cohomology", "cohomology table over a box");
  addCommon(cohomology, job);
  addWindow(cohomology, job);
  cohomology->add_option("--format", cohomologyFormat, "table, matrix or json");

  auto* matrix = app.add_subcommand("matrix", "cohomology matrix for two factors");
  addCommon(matrix, job);
  addWindow(matrix, job);

  auto* beilinson = app.add_subcommand("beilinson", "Beilinson monad");
  addCommon(beilinson, job);
  beilinson->add_option("--format", job.format, "text or json");

  auto* pushforward = app.add_subcommand("pushforward", "direct image along a projection");
  addCommon(pushforward, job);
  pushforward->add_option("--factors", job.factors, "retained factors, e.g. 1");
  pushforward->add_option("--format", job.format, "text or json");

  auto* corner = app.add_subcommand("corner", "corner complex at a degree");
  addCommon(corner, job);
  addWindow(corner, job);
  corner->add_option("--corner,-c", job.corner, "corner degree");
  corner->add_option("--format", job.format, "text, json or betti-json");

  auto* strandCmd = app.add_subcommand("strand", "strand of a Tate window");
  addCommon(strandCmd, job);
  addWindow(strandCmd, job);
  addTateFlags(strandCmd, job);
  strandCmd->add_option("--anchor", job.anchor, "fixed label on omitted factors");
  strandCmd->add_option("--factors", job.factors, "retained factors");
  strandCmd->add_flag("--project", job.project, "rewrite over the retained factors");
  strandCmd->add_option("--format", job.format, "text, json or betti-json");

  auto* verify = app.add_subcommand("verify", "regularity, exactness and monad checks");
  addCommon(verify, job);
  addWindow(verify, job);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << errorJson("validation", e.what()).dump() << "\n";
    return kValidationError;
  }

  try {
    std::string artifact;
    bool failed = false;
    if (tate->parsed())
      artifact = runTate(job);
    else if (cohomology->parsed())
      artifact = runCohomology(job, cohomologyFormat);
    else if (matrix->parsed())
      artifact = runCohomology(job, "matrix");
    else if (beilinson->parsed())
      artifact = runBeilinson(job);
    else if (pushforward->parsed())
      artifact = runPushforward(job);
    else if (corner->parsed())
      artifact = runCorner(job);
    else if (strandCmd->parsed())
      artifact = runStrand(job);
    else if (verify->parsed())
      artifact = runVerify(job, failed);

    if (job.out.empty()) {
      out << artifact;
    } else {
      std::ofstream file(job.out, std::ios::binary);
      if (!file)
        throw ValidationError("cannot write " + job.out);
      file << artifact;
    }
    if (failed) {
      err << errorJson("computation", "verification failed").dump() << "\n";
      return kComputationError;
    }
    return kOk;
  } catch (const RegularityError& e) {
    Json j = errorJson("computation", e.what());
    j["lastDegree"] = multidegreeToJson(e.lastDegree);
    err << j.dump() << "\n";
    return kComputationError;
  } catch (const ExactnessError& e) {
    Json j = errorJson("computation", e.what());
    j["failingDegree"] = multidegreeToJson(e.failingDegree);
    err << j.dump() << "\n";
    return kComputationError;
  } catch (const std::logic_error& e) {
    // FormatError, ValidationError, CoverageError and other argument checks
    err << errorJson("validation", e.what()).dump() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << errorJson("computation", e.what()).dump() << "\n";
    return kComputationError;
  }
}

} // namespace tate::cli
