// Copyright 2026 the nevk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nevk/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nevk/errors.hpp"
#include "nevk/groebner.hpp"
#include "nevk/polyparse.hpp"

namespace nevk {

namespace {

[[noreturn]] void fieldError(const std::string& path, const std::string& msg) {
  throw ParseError(msg + " (at " + path + ")", -1, path);
}

MultiForm parseFormField(const std::string& text, int nvars,
                         const std::string& path, bool requireHomogeneous) {
  MultiForm f(nvars);
  try {
    f = parseForm(text, nvars);
  } catch (const ParseError& e) {
    fieldError(path, std::string(e.what()));
  }
  if (f.isZero()) fieldError(path, "form is identically zero");
  if (requireHomogeneous && !f.isHomogeneous())
    fieldError(path, "form '" + text + "' is not homogeneous");
  return f;
}

std::string plPieceToText(const Line& l) {
  std::string out;
  if (l.slope != 0) {
    if (l.slope == -1)
      out += "-s";
    else if (l.slope != 1)
      out += ratToString(l.slope) + "*s";
    else
      out += "s";
  }
  if (l.intercept != 0 || out.empty()) {
    if (!out.empty()) out += l.intercept > 0 ? " + " : " - ";
    out += ratToString(l.intercept > 0 || out.empty() ? l.intercept
                                                      : -l.intercept);
  }
  return out;
}

std::string plToText(const PiecewiseLinear& f) {
  std::ostringstream os;
  const auto& br = f.breakpoints();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    if (i > 0) os << "; ";
    std::string lo = i == 0 ? (f.hasLowerBound()
                                   ? ratToString(f.lowerBound())
                                   : std::string("-inf"))
                            : ratToString(br[i - 1]);
    std::string hi = i < br.size() ? ratToString(br[i]) : "inf";
    os << plPieceToText(f.pieces()[i]) << " on [" << lo << ", " << hi << ")";
  }
  return os.str();
}

}  // namespace

Json piecewiseToJson(const PiecewiseLinear& f) {
  Json j;
  j["domainStart"] =
      f.hasLowerBound() ? Json(ratToString(f.lowerBound())) : Json(nullptr);
  j["breakpoints"] = Json::array();
  for (const auto& b : f.breakpoints()) j["breakpoints"].push_back(ratToString(b));
  j["pieces"] = Json::array();
  for (const auto& pc : f.pieces())
    j["pieces"].push_back(Json{{"slope", ratToString(pc.slope)},
                               {"intercept", ratToString(pc.intercept)}});
  return j;
}

AnalyticCurve Scenario::curve() const {
  std::vector<Series> comps = curveComponents;
  if (truncation) {
    for (auto& c : comps) c = c.withTruncation(*truncation);
    // Reducedness is not decidable from finitely many coefficients; the
    // scenario author asserts it by declaring the truncation.
    return AnalyticCurve{std::move(comps), mode, true};
  }
  return reduceRepresentation(std::move(comps), mode);
}

VarietyContext Scenario::context() const {
  int n = projectiveDimension(variety, ambientDim + 1);
  if (declaredDimension && *declaredDimension != n)
    throw PreconditionError("declared dimension " +
                            std::to_string(*declaredDimension) +
                            " but computed dimension " + std::to_string(n));
  return VarietyContext{ambientDim, variety, n};
}

Scenario parseScenario(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     static_cast<int>(e.byte));
  }
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");

  Scenario sc;
  if (!doc.contains("p") || !doc["p"].is_number_integer())
    fieldError("p", "missing or non-integer prime");
  sc.p = Int(doc["p"].get<long>());
  if (!isPrime(sc.p)) fieldError("p", "p = " + sc.p.get_str() + " is not prime");

  if (!doc.contains("ambientDim") || !doc["ambientDim"].is_number_integer())
    fieldError("ambientDim", "missing or non-integer ambient dimension");
  sc.ambientDim = doc["ambientDim"].get<int>();
  if (sc.ambientDim < 1) fieldError("ambientDim", "ambientDim must be >= 1");
  const int nvars = sc.ambientDim + 1;

  std::string modeText = doc.value("mode", std::string("entire"));
  if (modeText == "entire")
    sc.mode = CurveMode::Entire;
  else if (modeText == "punctured")
    sc.mode = CurveMode::Punctured;
  else
    fieldError("mode", "mode must be 'entire' or 'punctured'");

  if (doc.contains("variety")) {
    if (!doc["variety"].is_array())
      fieldError("variety", "variety must be an array of form strings");
    int i = 0;
    for (const auto& v : doc["variety"]) {
      std::string path = "variety[" + std::to_string(i++) + "]";
      if (!v.is_string()) fieldError(path, "expected a form string");
      sc.varietyText.push_back(v.get<std::string>());
      sc.variety.push_back(
          parseFormField(sc.varietyText.back(), nvars, path, true));
    }
  }

  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_integer())
      fieldError("dimension", "dimension must be an integer");
    sc.declaredDimension = doc["dimension"].get<int>();
  }

  if (!doc.contains("curve") || !doc["curve"].is_array() ||
      doc["curve"].empty())
    fieldError("curve", "missing or empty curve component array");
  {
    int i = 0;
    for (const auto& c : doc["curve"]) {
      std::string path = "curve[" + std::to_string(i++) + "]";
      if (!c.is_string()) fieldError(path, "expected a component string");
      sc.curveText.push_back(c.get<std::string>());
      try {
        sc.curveComponents.push_back(parseSeries(
            sc.curveText.back(), sc.mode == CurveMode::Punctured));
      } catch (const ParseError& e) {
        fieldError(path, e.what());
      }
    }
  }
  if (static_cast<int>(sc.curveComponents.size()) != nvars)
    fieldError("curve", "expected " + std::to_string(nvars) +
                            " components for ambientDim " +
                            std::to_string(sc.ambientDim));

  if (doc.contains("truncation")) {
    const auto& t = doc["truncation"];
    if (!t.is_object() || !t.contains("order") || !t.contains("sMax"))
      fieldError("truncation", "truncation needs {order, sMax}");
    sc.truncation = Truncation{t["order"].get<long>(),
                               ratFromString(t["sMax"].get<std::string>())};
  }

  if (!doc.contains("hypersurfaces") || !doc["hypersurfaces"].is_array() ||
      doc["hypersurfaces"].empty())
    fieldError("hypersurfaces", "missing or empty hypersurface array");
  {
    int i = 0;
    for (const auto& h : doc["hypersurfaces"]) {
      std::string path = "hypersurfaces[" + std::to_string(i++) + "]";
      if (!h.is_object() || !h.contains("name") || !h.contains("form"))
        fieldError(path, "expected {name, form}");
      ScenarioHypersurface sh;
      sh.name = h["name"].get<std::string>();
      sh.formText = h["form"].get<std::string>();
      sh.form = parseFormField(sh.formText, nvars, path + ".form", true);
      sc.hypersurfaces.push_back(std::move(sh));
    }
  }

  if (doc.contains("samples")) {
    int i = 0;
    for (const auto& s : doc["samples"]) {
      std::string path = "samples[" + std::to_string(i++) + "]";
      if (!s.is_string()) fieldError(path, "samples are rational strings");
      sc.samples.push_back(ratFromString(s.get<std::string>()));
    }
  }
  if (sc.samples.empty())
    for (int s = 0; s <= 4; ++s) sc.samples.push_back(Rat(s));

  if (doc.contains("cap")) sc.cap = doc["cap"].get<long>();
  return sc;
}

std::string serializeScenario(const Scenario& sc) {
  Json j;
  j["p"] = sc.p.get_si();
  j["ambientDim"] = sc.ambientDim;
  j["mode"] = sc.mode == CurveMode::Punctured ? "punctured" : "entire";
  j["variety"] = sc.varietyText;
  if (sc.declaredDimension) j["dimension"] = *sc.declaredDimension;
  j["curve"] = sc.curveText;
  if (sc.truncation)
    j["truncation"] = Json{{"order", sc.truncation->order},
                           {"sMax", ratToString(sc.truncation->sMax)}};
  j["hypersurfaces"] = Json::array();
  for (const auto& h : sc.hypersurfaces)
    j["hypersurfaces"].push_back(Json{{"name", h.name}, {"form", h.formText}});
  j["samples"] = Json::array();
  for (const auto& s : sc.samples) j["samples"].push_back(ratToString(s));
  if (sc.cap > 0) j["cap"] = sc.cap;
  return j.dump(2);
}

Command commandFromString(const std::string& name) {
  if (name == "polygon") return Command::Polygon;
  if (name == "fmt-check") return Command::FmtCheck;
  if (name == "general-position") return Command::GeneralPosition;
  if (name == "certificates") return Command::Certificates;
  if (name == "defect-report") return Command::DefectReport;
  if (name == "verify") return Command::Verify;
  throw ConfigError("unknown command '" + name + "'");
}

namespace {

std::vector<NamedForm> namedForms(const Scenario& sc) {
  std::vector<NamedForm> v;
  for (const auto& h : sc.hypersurfaces) v.push_back({h.name, h.form});
  return v;
}

std::vector<std::vector<int>> subsetsOfSize(int q, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == q - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] =
          idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Json certificateToJson(const NullstellensatzCertificate& cert,
                       const std::vector<std::string>& names) {
  Json j;
  j["subset"] = names;
  j["delta"] = cert.delta;
  j["logConstant"] = ratToString(cert.logConstant);
  j["exponents"] = cert.exponents;
  j["cofactors"] = Json::array();
  for (std::size_t k = 0; k < cert.b.size(); ++k) {
    Json row = Json::array();
    for (const auto& f : cert.b[k]) row.push_back(f.toString());
    j["cofactors"].push_back(std::move(row));
  }
  return j;
}

struct CommandContext {
  AnalyticCurve f;
  VarietyContext x;
};

Report polygonReport(const Scenario& sc, const CommandContext& cc) {
  Json out;
  std::ostringstream text;
  out["command"] = "polygon";
  out["hypersurfaces"] = Json::array();
  for (const auto& h : sc.hypersurfaces) {
    Series g = formEvaluate(h.form, cc.f);
    Json e;
    e["name"] = h.name;
    if (g.isZero()) {
      e["identicallyZero"] =
          classify(g) == Zeroness::ExactZero ? "exact" : "to-precision";
      text << h.name << ": Q o f identically zero\n";
    } else {
      NewtonPolygon poly = newtonPolygon(g, sc.p);
      e["ord0"] = poly.ord0;
      e["vertices"] = Json::array();
      for (const auto& [j, v] : poly.vertices)
        e["vertices"].push_back(Json{{"index", j}, {"valuation", ratToString(v)}});
      e["segments"] = Json::array();
      text << h.name << ": ord0 = " << poly.ord0 << ", segments:";
      for (const auto& seg : poly.segments) {
        e["segments"].push_back(Json{{"slope", ratToString(seg.slope)},
                                     {"length", seg.length}});
        text << " (slope " << ratToString(seg.slope) << ", length "
             << seg.length << ")";
      }
      text << "\n";
    }
    out["hypersurfaces"].push_back(std::move(e));
  }
  return {std::move(out), text.str(), 0};
}

Report fmtCheckReport(const Scenario& sc, const CommandContext& cc) {
  Json out;
  std::ostringstream text;
  out["command"] = "fmt-check";
  out["hypersurfaces"] = Json::array();
  bool allConstant = true;
  for (const auto& h : sc.hypersurfaces) {
    PiecewiseLinear res = fmtResidual(cc.f, h.form, sc.p);
    bool constant = res.isConstant();
    allConstant = allConstant && constant;
    Json e;
    e["name"] = h.name;
    e["residual"] = piecewiseToJson(res);
    e["constant"] = constant;
    if (constant) e["value"] = ratToString(res(res.hasLowerBound()
                                                   ? res.lowerBound()
                                                   : Rat(0)));
    out["hypersurfaces"].push_back(std::move(e));
    text << h.name << ": m + N - dT = " << plToText(res)
         << (constant ? " (constant)" : " (NOT constant)") << "\n";
  }
  out["verdict"] = allConstant;
  text << "first main theorem residuals "
       << (allConstant ? "all constant: PASS" : "NOT constant: FAIL") << "\n";
  return {std::move(out), text.str(), allConstant ? 0 : 1};
}

Report generalPositionReport(const Scenario& sc, const CommandContext& cc) {
  std::vector<MultiForm> forms;
  for (const auto& h : sc.hypersurfaces) forms.push_back(h.form);
  GeneralPositionResult gp = generalPosition(cc.x, forms, sc.cap);
  Json out;
  std::ostringstream text;
  out["command"] = "general-position";
  out["ok"] = gp.ok;
  if (gp.ok) {
    text << "hypersurfaces are in general position with X\n";
  } else {
    Json w = Json::array();
    text << "general position FAILS; witness subset {";
    for (std::size_t i = 0; i < gp.witness.size(); ++i) {
      const auto& name =
          sc.hypersurfaces[static_cast<std::size_t>(gp.witness[i])].name;
      w.push_back(name);
      text << (i ? ", " : "") << name;
    }
    text << "}\n";
    out["witness"] = std::move(w);
  }
  return {std::move(out), text.str(), gp.ok ? 0 : 1};
}

Report certificatesReport(const Scenario& sc, const CommandContext& cc) {
  Json out;
  std::ostringstream text;
  out["command"] = "certificates";
  out["certificates"] = Json::array();
  const int n = cc.x.dimension;
  const int q = static_cast<int>(sc.hypersurfaces.size());
  if (q < n + 1)
    throw PreconditionError("need at least n+1 = " + std::to_string(n + 1) +
                            " hypersurfaces");
  bool allVerified = true;
  bool constantCurve = isConstantCurve(cc.f);
  for (const auto& subset : subsetsOfSize(q, n + 1)) {
    std::vector<MultiForm> forms;
    std::vector<std::string> names;
    for (int i : subset) {
      forms.push_back(sc.hypersurfaces[static_cast<std::size_t>(i)].form);
      names.push_back(sc.hypersurfaces[static_cast<std::size_t>(i)].name);
    }
    NullstellensatzCertificate cert =
        nullstellensatzCertificate(cc.x, forms, sc.p, sc.cap);
    bool ok = verifyCertificateOnCurve(cert, cc.f, sc.p, sc.samples);
    allVerified = allVerified && ok;
    Json e = certificateToJson(cert, names);
    e["curveInequalityVerified"] = ok;
    if (constantCurve) e["constantCurve"] = true;
    out["certificates"].push_back(std::move(e));
    text << "{";
    for (std::size_t i = 0; i < names.size(); ++i)
      text << (i ? ", " : "") << names[i];
    text << "}: Delta = " << cert.delta
         << ", logConstant = " << ratToString(cert.logConstant)
         << ", curve inequality " << (ok ? "verified" : "FAILED") << "\n";
  }
  if (constantCurve)
    text << "note: constant curve, inequality is vacuous\n";
  out["verdict"] = allVerified;
  return {std::move(out), text.str(), allVerified ? 0 : 1};
}

Json defectEntryToJson(const HypersurfaceReport& h) {
  Json e;
  e["name"] = h.name;
  e["degree"] = h.degree;
  e["defect"] = ratToString(h.defect.value);
  if (h.defect.estimateOnly) e["estimateOnly"] = true;
  e["omitted"] = h.omitted;
  return e;
}

NevanlinnaReport runRelation(const Scenario& sc, const CommandContext& cc) {
  return sc.mode == CurveMode::Punctured
             ? laurentDefectCheck(cc.f, cc.x, namedForms(sc), sc.p, sc.cap)
             : defectRelationCheck(cc.f, cc.x, namedForms(sc), sc.p, sc.cap);
}

Report defectReportCmd(const Scenario& sc, const CommandContext& cc) {
  NevanlinnaReport rep = runRelation(sc, cc);
  Json out;
  std::ostringstream text;
  out["command"] = "defect-report";
  out["defects"] = Json::array();
  for (const auto& h : rep.perHypersurface) {
    out["defects"].push_back(defectEntryToJson(h));
    text << h.name << ": delta = " << ratToString(h.defect.value)
         << (h.defect.estimateOnly ? " (estimate)" : "")
         << (h.omitted ? " [omitted]" : "") << "\n";
  }
  out["defectSum"] = ratToString(rep.defectSum);
  out["positiveCount"] = rep.positiveDefectCount;
  out["bound"] = rep.multiplier * cc.x.dimension;
  bool ok = rep.defectSumWithinBound && rep.positiveCountWithinBound;
  out["verdict"] = ok;
  text << "sum of defects = " << ratToString(rep.defectSum) << " <= "
       << rep.multiplier * cc.x.dimension << ": "
       << (rep.defectSumWithinBound ? "PASS" : "FAIL") << "\n";
  text << "positive defects = " << rep.positiveDefectCount << ": "
       << (rep.positiveCountWithinBound ? "PASS" : "FAIL") << "\n";
  return {std::move(out), text.str(), ok ? 0 : 1};
}

Report verifyReport(const Scenario& sc, const CommandContext& cc) {
  Json out;
  std::ostringstream text;
  out["command"] = "verify";
  out["onVariety"] = checkOnVariety(cc.f, cc.x);
  out["reducedness"] =
      sc.truncation ? "asserted-by-user" : "computed";
  out["dimension"] = cc.x.dimension;
  if (!out["onVariety"].get<bool>())
    throw PreconditionError("curve does not lie on X");

  // General position first: its failure is a verdict, not an error.
  std::vector<MultiForm> forms;
  for (const auto& h : sc.hypersurfaces) forms.push_back(h.form);
  GeneralPositionResult gp = generalPosition(cc.x, forms, sc.cap);
  out["generalPosition"] = gp.ok;
  if (!gp.ok) {
    Json w = Json::array();
    text << "general position FAILS; witness subset {";
    for (std::size_t i = 0; i < gp.witness.size(); ++i) {
      const auto& name =
          sc.hypersurfaces[static_cast<std::size_t>(gp.witness[i])].name;
      w.push_back(name);
      text << (i ? ", " : "") << name;
    }
    text << "}\n";
    out["witness"] = std::move(w);
    out["verdict"] = false;
    return {std::move(out), text.str(), 1};
  }

  NevanlinnaReport rep = runRelation(sc, cc);
  out["T"] = piecewiseToJson(rep.T);
  text << "T(s) = " << plToText(rep.T) << "\n";
  out["hypersurfaces"] = Json::array();
  bool residualsConstant = true;
  for (const auto& h : rep.perHypersurface) {
    Json e = defectEntryToJson(h);
    e["proximity"] = piecewiseToJson(h.proximity);
    e["counting"] = piecewiseToJson(h.counting);
    e["fmtResidual"] = piecewiseToJson(h.fmtResidual);
    e["fmtConstant"] = h.fmtResidual.isConstant();
    residualsConstant = residualsConstant && h.fmtResidual.isConstant();
    out["hypersurfaces"].push_back(std::move(e));
    text << h.name << ": m = " << plToText(h.proximity)
         << "; N = " << plToText(h.counting)
         << "; delta = " << ratToString(h.defect.value)
         << (h.omitted ? " [omitted]" : "") << "\n";
  }
  out["gap"] = piecewiseToJson(rep.gap);
  out["gapBounded"] = rep.gapBounded;
  if (rep.gapBounded) out["gapSupremum"] = ratToString(rep.gapSupremum);
  out["defectSum"] = ratToString(rep.defectSum);
  out["positiveCount"] = rep.positiveDefectCount;
  out["omittedCount"] = rep.omittedCount;
  out["multiplier"] = rep.multiplier;
  text << "gap = sum m/deg - " << rep.multiplier * cc.x.dimension
       << "T = " << plToText(rep.gap) << "\n";
  if (rep.gapBounded)
    text << "gap supremum (realized O(1) constant): "
         << ratToString(rep.gapSupremum) << "\n";
  text << "sum of defects = " << ratToString(rep.defectSum) << "\n";

  // Certificate for the first (n+1)-subset, plus the per-sample ordering
  // of the |G_j o f|_s that the proof's index rearrangement refers to.
  long delta = 1;
  for (const auto& h : sc.hypersurfaces)
    delta = std::lcm(delta, static_cast<long>(h.form.degree()));
  {
    const int n = cc.x.dimension;
    std::vector<MultiForm> firstForms;
    std::vector<std::string> firstNames;
    for (int i = 0; i <= n; ++i) {
      firstForms.push_back(sc.hypersurfaces[static_cast<std::size_t>(i)].form);
      firstNames.push_back(sc.hypersurfaces[static_cast<std::size_t>(i)].name);
    }
    NullstellensatzCertificate cert =
        nullstellensatzCertificate(cc.x, firstForms, sc.p, sc.cap);
    bool certOk = verifyCertificateOnCurve(cert, cc.f, sc.p, sc.samples);
    Json cj = certificateToJson(cert, firstNames);
    cj["curveInequalityVerified"] = certOk;
    out["certificate"] = std::move(cj);
    text << "certificate {Delta = " << cert.delta
         << ", logConstant = " << ratToString(cert.logConstant) << "}: "
         << (certOk ? "verified on curve" : "FAILED on curve") << "\n";

    Json orders = Json::array();
    for (const Rat& s : sc.samples) {
      std::vector<std::pair<Rat, std::string>> vals;
      for (const auto& h : sc.hypersurfaces) {
        Series gof = formEvaluate(
            formPow(h.form, delta / h.form.degree()), cc.f);
        if (gof.isZero()) continue;
        vals.emplace_back(gaussNormPL(gof, sc.p)(s), h.name);
      }
      std::stable_sort(vals.begin(), vals.end(),
                       [](const auto& a, const auto& b) {
                         return a.first < b.first;
                       });
      Json o;
      o["s"] = ratToString(s);
      o["ascending"] = Json::array();
      for (const auto& [v, name] : vals)
        o["ascending"].push_back(
            Json{{"name", name}, {"logNorm", ratToString(v)}});
      orders.push_back(std::move(o));
    }
    out["envelopeOrder"] = std::move(orders);

    bool verdict = rep.verdict && residualsConstant && certOk;
    out["verdict"] = verdict;
    text << "verdict: " << (verdict ? "PASS" : "FAIL") << "\n";
    return {std::move(out), text.str(), verdict ? 0 : 1};
  }
}

}  // namespace

Report runScenario(const Scenario& sc, Command command) {
  try {
    CommandContext cc{sc.curve(), sc.context()};
    switch (command) {
      case Command::Polygon: return polygonReport(sc, cc);
      case Command::FmtCheck: return fmtCheckReport(sc, cc);
      case Command::GeneralPosition: return generalPositionReport(sc, cc);
      case Command::Certificates: return certificatesReport(sc, cc);
      case Command::DefectReport: return defectReportCmd(sc, cc);
      case Command::Verify: return verifyReport(sc, cc);
    }
    throw ConfigError("unhandled command");
  } catch (const InconclusiveError& e) {
    Json out{{"error", e.what()}, {"cap", e.cap()}};
    return {std::move(out), std::string("error: ") + e.what() + "\n", 2};
  } catch (const Error& e) {
    Json out{{"error", e.what()}};
    return {std::move(out), std::string("error: ") + e.what() + "\n", 2};
  }
}

}  // namespace nevk
