#include <doctest.h>

#include <string>

#include "nevk/errors.hpp"
#include "nevk/scenario.hpp"

using namespace nevk;

namespace {

const char* kMinimalP1 = R"({
  "p": 2,
  "ambientDim": 1,
  "mode": "entire",
  "curve": ["1", "z"],
  "hypersurfaces": [
    {"name": "H0", "form": "x0"},
    {"name": "H1", "form": "x1"}
  ]
})";

const char* kConic = R"({
  "p": 2,
  "ambientDim": 2,
  "mode": "entire",
  "variety": ["x0*x2 - x1^2"],
  "dimension": 1,
  "curve": ["1", "z", "z^2"],
  "hypersurfaces": [
    {"name": "D0", "form": "x0"},
    {"name": "D2", "form": "x2"},
    {"name": "Dsum", "form": "x0 + x1 + x2"}
  ]
})";

}  // namespace

TEST_CASE("parseScenario minimal document") {
  Scenario sc = parseScenario(kMinimalP1);
  CHECK(sc.p == Int(2));
  CHECK(sc.ambientDim == 1);
  CHECK(sc.mode == CurveMode::Entire);
  CHECK(sc.curveComponents.size() == 2);
  CHECK(sc.hypersurfaces.size() == 2);
  CHECK(sc.samples.size() == 5);  // default 0..4
  AnalyticCurve f = sc.curve();
  CHECK(f.components[1] == Series::monomial(1, Rat(1)));
}

TEST_CASE("parseScenario validates forms") {
  Scenario sc = parseScenario(kConic);
  CHECK(sc.variety[0].degree() == 2);
  CHECK(sc.context().dimension == 1);

  std::string inhomogeneous = R"({
    "p": 2, "ambientDim": 1, "mode": "entire", "curve": ["1", "z"],
    "hypersurfaces": [{"name": "H", "form": "x0 + x1^2"}]
  })";
  CHECK_THROWS_AS(parseScenario(inhomogeneous), ParseError);

  std::string nonPrime = R"({
    "p": 6, "ambientDim": 1, "mode": "entire", "curve": ["1", "z"],
    "hypersurfaces": [{"name": "H", "form": "x0"}]
  })";
  CHECK_THROWS_AS(parseScenario(nonPrime), ParseError);

  std::string wrongArity = R"({
    "p": 2, "ambientDim": 2, "mode": "entire", "curve": ["1", "z"],
    "hypersurfaces": [{"name": "H", "form": "x0"}]
  })";
  CHECK_THROWS_AS(parseScenario(wrongArity), ParseError);

  std::string laurentInEntire = R"({
    "p": 2, "ambientDim": 1, "mode": "entire", "curve": ["1", "z^-1"],
    "hypersurfaces": [{"name": "H", "form": "x0"}]
  })";
  CHECK_THROWS_AS(parseScenario(laurentInEntire), ParseError);
}

TEST_CASE("round trip parse -> serialize -> parse") {
  Scenario sc = parseScenario(kConic);
  std::string text = serializeScenario(sc);
  Scenario back = parseScenario(text);
  CHECK(serializeScenario(back) == text);
  CHECK(back.p == sc.p);
  CHECK(back.variety == sc.variety);
  CHECK(back.curveComponents == sc.curveComponents);
  CHECK(back.hypersurfaces.size() == sc.hypersurfaces.size());
}

TEST_CASE("verify command on the conic is deterministic and tight") {
  Scenario sc = parseScenario(kConic);
  Report a = runScenario(sc, Command::Verify);
  Report b = runScenario(sc, Command::Verify);
  CHECK(a.exitCode == 0);
  CHECK(a.machine.dump() == b.machine.dump());  // byte-identical
  CHECK(a.machine["gapSupremum"] == "0");
  CHECK(a.machine["defectSum"] == "1");
  CHECK(a.machine["verdict"] == true);
  CHECK(a.machine["generalPosition"] == true);
  CHECK(a.machine["onVariety"] == true);
  CHECK(a.machine["certificate"]["logConstant"] == "0");
  CHECK(a.machine["certificate"]["curveInequalityVerified"] == true);
}

TEST_CASE("general-position failure exits 1 with witness") {
  std::string bad = R"({
    "p": 2, "ambientDim": 2, "mode": "entire",
    "variety": ["x0*x2 - x1^2"],
    "curve": ["1", "z", "z^2"],
    "hypersurfaces": [
      {"name": "D0", "form": "x0"},
      {"name": "D1", "form": "x1"}
    ]
  })";
  Scenario sc = parseScenario(bad);
  Report gp = runScenario(sc, Command::GeneralPosition);
  CHECK(gp.exitCode == 1);
  CHECK(gp.machine["ok"] == false);
  CHECK(gp.machine["witness"][0] == "D0");
  CHECK(gp.machine["witness"][1] == "D1");

  Report v = runScenario(sc, Command::Verify);
  CHECK(v.exitCode == 1);
}

TEST_CASE("polygon and fmt-check commands") {
  Scenario sc = parseScenario(kConic);
  Report poly = runScenario(sc, Command::Polygon);
  CHECK(poly.exitCode == 0);
  CHECK(poly.machine["hypersurfaces"].size() == 3);

  Report fmt = runScenario(sc, Command::FmtCheck);
  CHECK(fmt.exitCode == 0);
  for (const auto& h : fmt.machine["hypersurfaces"])
    CHECK(h["constant"] == true);
}

TEST_CASE("punctured scenario verifies with the 2n bound") {
  std::string punctured = R"({
    "p": 2, "ambientDim": 1, "mode": "punctured",
    "curve": ["1", "z"],
    "hypersurfaces": [
      {"name": "H0", "form": "x0"},
      {"name": "H1", "form": "x1"}
    ]
  })";
  Scenario sc = parseScenario(punctured);
  Report rep = runScenario(sc, Command::Verify);
  CHECK(rep.exitCode == 0);
  CHECK(rep.machine["multiplier"] == 2);
  CHECK(rep.machine["gapSupremum"] == "0");
  CHECK(rep.machine["defectSum"] == "2");
}

TEST_CASE("inconclusive cap surfaces as exit 2") {
  std::string capped = R"({
    "p": 2, "ambientDim": 1, "mode": "entire",
    "curve": ["1", "z"],
    "hypersurfaces": [
      {"name": "H0", "form": "x0^3"},
      {"name": "H1", "form": "x1^3"}
    ],
    "cap": 2
  })";
  Scenario sc = parseScenario(capped);
  Report rep = runScenario(sc, Command::Certificates);
  CHECK(rep.exitCode == 2);
}

TEST_CASE("commandFromString") {
  CHECK(commandFromString("verify") == Command::Verify);
  CHECK(commandFromString("defect-report") == Command::DefectReport);
  CHECK_THROWS_AS(commandFromString("nonsense"), ConfigError);
}
