#include "kgspin/certificate.hpp"

#include "doctest.h"

using namespace kgspin;

TEST_CASE("certificate for n=5 passes on both routes") {
  auto cert = decide_property_g(5);
  CHECK(cert.route == "A+B");
  CHECK(cert.property_g == "true");
  CHECK(cert.quantum_symmetry == "none");
  CHECK(certificate_exit_status(cert) == 0);
  bool has_route_a = false, has_combo = false;
  for (const auto& c : cert.checks)
    if (c.name == "route-A/transposition-in-A4" && c.status == "pass")
      has_route_a = true;
  for (const auto& [k, v] : cert.expressions)
    if (k == "R-as-closure-combination" && !v.empty()) has_combo = true;
  CHECK(has_route_a);
  CHECK(has_combo);
}

TEST_CASE("certificate for n=6 passes on both routes") {
  auto cert = decide_property_g(6);
  CHECK(cert.route == "A+B");
  CHECK(cert.property_g == "true");
  CHECK(certificate_exit_status(cert) == 0);
  int route_b_passes = 0;
  for (const auto& c : cert.checks)
    if (c.name.rfind("route-B/", 0) == 0 && c.status == "pass")
      ++route_b_passes;
  CHECK(route_b_passes >= 4);
}

TEST_CASE("json rendering is deterministic modulo timings") {
  auto c1 = decide_property_g(7);
  auto c2 = decide_property_g(7);
  CHECK(certificate_to_json(c1, false) == certificate_to_json(c2, false));
  auto j = certificate_to_json(c1, false);
  for (const char* key :
       {"\"n\"", "\"route\"", "\"checks\"", "\"property_g\"",
        "\"quantum_symmetry\"", "\"matrices\"", "\"expressions\"",
        "\"versions\""})
    CHECK(j.find(key) != std::string::npos);
  CHECK(j.find("\"timings\"") == std::string::npos);
  CHECK(certificate_to_json(c1, true).find("\"timings\"") !=
        std::string::npos);
}

TEST_CASE("undecided capacity contract") {
  DecideOptions opts;
  opts.run_route_a = false;
  opts.table_cap = 5;  // forces a capacity error inside route B
  auto cert = decide_property_g(8, opts);
  CHECK(cert.property_g == "undecided");
  CHECK(cert.quantum_symmetry == "unknown");
  CHECK(certificate_exit_status(cert) == 2);
}
