#include "doctest.h"
#include "graft/verify.hpp"

using namespace graft;

TEST_CASE("the exhaustive family is one representative per class") {
  const auto& tiny = verify::exhaustive_connected_grafts(3);
  // n=1: T={}  n=2: K2 with T={} or both  n=3: path with T in
  // {}, {end,end}, {end,center} and triangle with T empty or any pair
  CHECK(tiny.size() == 1 + 2 + 3 + 2);
  for (const Graft& g : tiny) {
    CHECK(g.graph().connected());
    CHECK(g.graph().vertex_count() <= 3);
  }
  const auto& four = verify::exhaustive_connected_grafts(4);
  CHECK(four.size() > tiny.size());
  // spot: every instance is canonical, so no two compare label-equal
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j)
      CHECK_FALSE(same_labeled_graft(four[i], four[j]));
}

TEST_CASE("suites run clean on a correct build") {
  verify::Options opts;
  opts.max_n = 5;
  opts.trials = 8;
  opts.seed = 123;
  for (const std::string& name : verify::suite_names()) {
    if (name == "all") continue;
    const verify::VerificationReport report = verify::run_verify_suite(name, opts);
    INFO(name);
    CHECK(report.ok());
    CHECK(report.instances > 0);
  }
}

TEST_CASE("an empty parameter set runs zero instances and passes") {
  verify::Options opts;
  opts.max_n = 0;
  opts.trials = 0;
  opts.seed = 1;
  const verify::VerificationReport report = verify::run_verify_suite("joins", opts);
  CHECK(report.instances == 0);
  CHECK(report.ok());
}

TEST_CASE("unknown suites are rejected") {
  verify::Options opts;
  try {
    verify::run_verify_suite("nonsense", opts);
    FAIL("unknown suite accepted");
  } catch (const GraftError& e) {
    CHECK(e.code() == Errc::UnknownSuite);
  }
}

TEST_CASE("a broken distance formula is caught with a minimal witness") {
  verify::Options opts;
  opts.max_n = 4;
  opts.trials = 5;
  opts.seed = 77;
  const verify::VerificationReport report =
      verify::check_distance_tables(opts, /*mutation_offset=*/1);
  REQUIRE_FALSE(report.ok());
  const verify::Failure& f = report.failures.front();
  CHECK(f.property == "distance-equals-shortest-path");
  CHECK_FALSE(f.witness.empty());
  // the witness shrinks to a single edge: the smallest graft with a distance
  const GraftDocument doc = parse_graft_document(f.instance);
  CHECK(doc.vertices.size() <= 2);
}

TEST_CASE("reports serialize deterministically") {
  verify::Options opts;
  opts.max_n = 4;
  opts.trials = 3;
  opts.seed = 9;
  const auto a = verify::run_verify_suite("joins", opts);
  const auto b = verify::run_verify_suite("joins", opts);
  CHECK(verify::report_to_json(a) == verify::report_to_json(b));
  CHECK(verify::report_to_json(a).find("\"suite\": \"joins\"") != std::string::npos);
}
