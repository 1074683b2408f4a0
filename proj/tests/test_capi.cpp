#include "doctest.h"

#include <string>

#include "galois/galois.h"
#include "json.hpp"

namespace {

struct Config {
  galois_config* cfg = nullptr;
  Config() { REQUIRE(galois_config_new(&cfg) == GALOIS_OK); }
  ~Config() { galois_config_free(cfg); }
};

struct Report {
  galois_report* r = nullptr;
  explicit Report(const galois_config* cfg) { REQUIRE(galois_run(cfg, &r) == GALOIS_OK); }
  ~Report() { galois_report_free(r); }
};

}  // namespace

TEST_CASE("c api: oracle run") {
  Config c;
  REQUIRE(galois_config_set_command(c.cfg, "oracle") == GALOIS_OK);
  REQUIRE(galois_config_set_target(c.cfg, "filter") == GALOIS_OK);
  REQUIRE(galois_config_set_pred(c.cfg, "0b01") == GALOIS_OK);
  REQUIRE(galois_config_set_input(c.cfg, "1,0,1") == GALOIS_OK);
  REQUIRE(galois_config_set_format(c.cfg, GALOIS_FORMAT_JSON) == GALOIS_OK);
  Report r(c.cfg);
  CHECK(galois_report_exit_code(r.r) == 0);
  const auto j = nlohmann::json::parse(galois_report_output(r.r));
  CHECK(j["verdict"] == "pass");
  CHECK(j["value"]["value"] == "0");
  CHECK(std::string(galois_report_error(r.r)).empty());
}

TEST_CASE("c api: failing check and budget overrun map to exit codes") {
  Config c;
  galois_config_set_command(c.cfg, "find-counterexample");
  galois_config_set_target(c.cfg, "words-unwords");
  galois_config_set_universe(c.cfg, 2, 6);
  {
    Report r(c.cfg);
    CHECK(galois_report_exit_code(r.r) == 1);
  }
  galois_config_set_budget(c.cfg, 5);
  Report r(c.cfg);
  CHECK(galois_report_exit_code(r.r) == 2);
  CHECK(std::string(galois_report_output(r.r)).empty());
  CHECK(std::string(galois_report_error(r.r)).find("budget") != std::string::npos);
}

TEST_CASE("c api: argument errors") {
  Config c;
  CHECK(galois_config_set_command(c.cfg, "frobnicate") == GALOIS_E_USAGE);
  CHECK(std::string(galois_last_error()).find("frobnicate") != std::string::npos);
  CHECK(galois_config_set_universe(c.cfg, 0, 3) == GALOIS_E_USAGE);
  CHECK(galois_config_set_universe(c.cfg, 17, 3) == GALOIS_E_USAGE);
  CHECK(galois_config_set_pred(c.cfg, "0bxyz") == GALOIS_E_USAGE);
  CHECK(galois_config_set_workers(c.cfg, 0) == GALOIS_E_USAGE);
  CHECK(galois_config_set_target(nullptr, "x") == GALOIS_E_NULL);
  CHECK(galois_config_set_target(c.cfg, nullptr) == GALOIS_E_NULL);
  CHECK(galois_run(nullptr, nullptr) == GALOIS_E_NULL);
  CHECK(galois_config_new(nullptr) == GALOIS_E_NULL);
  CHECK(galois_config_set_target(c.cfg, "prefix") == GALOIS_OK);
  CHECK(std::string(galois_last_error()).empty());
}

TEST_CASE("c api: unknown target is a usage error at run time") {
  Config c;
  galois_config_set_command(c.cfg, "check-order");
  galois_config_set_target(c.cfg, "nope");
  Report r(c.cfg);
  CHECK(galois_report_exit_code(r.r) == 2);
}

TEST_CASE("c api: listing and version") {
  const std::string listing = galois_list_targets();
  CHECK(listing.find("words-unwords") != std::string::npos);
  CHECK(listing.find("specs: dropWhile filter take takeWhile zip\n") != std::string::npos);
  CHECK(std::string(galois_version()) == "1.0.0");
  galois_report_free(nullptr);
  galois_config_free(nullptr);
}
