#include <algorithm>
#include <cstring>
#include <string>

#include "doctest.h"
#include "heptad.h"

namespace {

struct Engine {
  heptad_engine *eng = heptad_engine_create();
  ~Engine() { heptad_engine_destroy(eng); }
};

struct Owned {
  char *s = nullptr;
  ~Owned() { heptad_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and status names") {
    CHECK(std::string(heptad_version()) == "1.0.0");
    CHECK(std::string(heptad_status_name(HEPTAD_OK)) == "ok");
    CHECK(std::string(heptad_status_name(HEPTAD_ERR_ARGUMENT)) == "invalid argument");
    CHECK(std::string(heptad_status_name(HEPTAD_ERR_NOMEM)) == "out of memory");
    CHECK(std::string(heptad_status_name(HEPTAD_ERR_INTERNAL)) == "internal error");
  }

  TEST_CASE("null engine and argument guards") {
    CHECK(heptad_verify(nullptr, "all", nullptr) == HEPTAD_ERR_ARGUMENT);
    CHECK(std::string(heptad_engine_last_error(nullptr)) == "");
    Engine e;
    REQUIRE(e.eng != nullptr);
    CHECK(std::string(heptad_engine_last_error(e.eng)) == "");
    CHECK(heptad_verify(e.eng, nullptr, nullptr) == HEPTAD_ERR_ARGUMENT);
    CHECK(std::string(heptad_engine_last_error(e.eng)) == "suite is null");
    CHECK(heptad_engine_set_threads(e.eng, 0) == HEPTAD_ERR_ARGUMENT);
    CHECK(std::string(heptad_engine_last_error(e.eng)) == "threads must be >= 1");
    CHECK(heptad_engine_set_threads(e.eng, 2) == HEPTAD_OK);
  }

  TEST_CASE("verify bijection suite") {
    Engine e;
    Owned report;
    CHECK(heptad_verify(e.eng, "bijection", &report.s) == HEPTAD_OK);
    REQUIRE(report.s != nullptr);
    CHECK(!heptad_report_failed(report.s));
    std::string r = report.str();
    CHECK(r.find("\"command\": \"verify bijection\"") != std::string::npos);
    CHECK(r.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(r.find("\"heptads\": 135") != std::string::npos);
    CHECK(r.find("\"version\": \"1.0.0\"") != std::string::npos);
    CHECK(r.back() == '\n');

    Owned bad;
    CHECK(heptad_verify(e.eng, "nonsense", &bad.s) == HEPTAD_ERR_ARGUMENT);
    CHECK(bad.s == nullptr);
    CHECK(std::string(heptad_engine_last_error(e.eng)).find("suite") != std::string::npos);
  }

  TEST_CASE("enumerate planes as csv and json") {
    Engine e;
    Owned payload, report;
    CHECK(heptad_enumerate(e.eng, "planes", "csv", 1, "planes.csv", &payload.s, &report.s) ==
          HEPTAD_OK);
    REQUIRE(payload.s != nullptr);
    std::string csv = payload.str();
    CHECK(csv.substr(0, csv.find('\n')) ==
          "index,op1,op2,op3,op4,op5,op6,op7,four_qubit,class");
    size_t rows = size_t(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(rows == 31);  // header plus the 30 all-symmetric heptads
    CHECK(csv.find("steiner") != std::string::npos);
    CHECK(csv.find("mixed") == std::string::npos);
    CHECK(report.str().find("\"planes.csv\"") != std::string::npos);

    Owned jpayload, jreport;
    CHECK(heptad_enumerate(e.eng, "planes", "json", 0, nullptr, &jpayload.s, &jreport.s) ==
          HEPTAD_OK);
    CHECK(jreport.str().find("\"rows\": 135") != std::string::npos);
    CHECK(jpayload.str().find("\"four_qubit\"") != std::string::npos);

    Owned err_report;
    CHECK(heptad_enumerate(e.eng, "widgets", "json", 0, nullptr, nullptr, &err_report.s) ==
          HEPTAD_ERR_ARGUMENT);
  }

  TEST_CASE("mapping both directions") {
    Engine e;
    Owned forward;
    CHECK(heptad_map_plane(e.eng, "ZII,IZI,IIZ", &forward.s) == HEPTAD_OK);
    std::string f = forward.str();
    CHECK(f.find("\"four_qubit\": \"ZIII\"") != std::string::npos);
    CHECK(f.find("\"class\": \"steiner\"") != std::string::npos);

    Owned backward;
    CHECK(heptad_map_fourqubit(e.eng, "ZIII", &backward.s) == HEPTAD_OK);
    CHECK(backward.str().find("\"ZZZ\"") != std::string::npos);

    Owned bad;
    CHECK(heptad_map_plane(e.eng, "XII,ZII,IIZ", &bad.s) == HEPTAD_ERR_ARGUMENT);
    CHECK(std::string(heptad_engine_last_error(e.eng)).size() > 0);
    Owned bad2;
    CHECK(heptad_map_fourqubit(e.eng, "YIII", &bad2.s) == HEPTAD_ERR_ARGUMENT);
    Owned bad3;
    CHECK(heptad_map_fourqubit(e.eng, "banana", &bad3.s) == HEPTAD_ERR_ARGUMENT);
  }

  TEST_CASE("hexagon check and export") {
    Engine e;
    Owned report;
    CHECK(heptad_hexagon(e.eng, 0, nullptr, nullptr, &report.s) == HEPTAD_OK);
    CHECK(!heptad_report_failed(report.s));
    CHECK(report.str().find("\"girth\": 12") != std::string::npos);

    Owned payload, report2;
    CHECK(heptad_hexagon(e.eng, 1, "hexagon.json", &payload.s, &report2.s) == HEPTAD_OK);
    REQUIRE(payload.s != nullptr);
    CHECK(payload.str().find("\"lines\"") != std::string::npos);
    CHECK(report2.str().find("\"hexagon.json\"") != std::string::npos);
  }

  TEST_CASE("group order and orbit") {
    Engine e;
    Owned order;
    CHECK(heptad_group_order(e.eng, "dalpha,dgamma", &order.s) == HEPTAD_OK);
    CHECK(order.str().find("\"order\": 12096") != std::string::npos);
    Owned orbit;
    CHECK(heptad_group_orbit(e.eng, "YIII", &orbit.s) == HEPTAD_OK);
    CHECK(orbit.str().find("\"size\": 120") != std::string::npos);
    Owned bad;
    CHECK(heptad_group_order(e.eng, "dalpha,rbeta", &bad.s) == HEPTAD_ERR_ARGUMENT);
  }

  TEST_CASE("report failure detection") {
    CHECK(heptad_report_failed(nullptr) == 0);
    CHECK(heptad_report_failed("{\"status\": \"pass\"}") == 0);
    CHECK(heptad_report_failed("{\"status\": \"fail\"}") == 1);
  }
}
