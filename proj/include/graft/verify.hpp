#pragma once

#include <functional>

#include "graft/generate.hpp"
#include "graft/oracle.hpp"

// Property-based verification harness. Each checker replays one slice of the
// structure theory against the brute-force oracles over an instance family:
// the exhaustive catalogue of small connected grafts plus seeded random ones.
namespace graft::verify {

struct Failure {
  std::string instance;  // serialized graft document (or composite description)
  std::string property;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  long instances = 0;  // individual property checks performed
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

struct Options {
  int max_n = 8;
  int trials = 200;
  std::uint64_t seed = 1;
};

// All connected grafts with at most max_n (<= 6) vertices, one per
// isomorphism class of (graph, terminal set). Memoized.
const std::vector<Graft>& exhaustive_connected_grafts(int max_n);

VerificationReport check_join_equivalence(const Options& opts);
// mutation_offset shifts the produced distances before comparison; nonzero
// values exist so tests can prove the harness catches a broken formula.
VerificationReport check_distance_tables(const Options& opts,
                                         int mutation_offset = 0);
VerificationReport check_switching(const Options& opts);
VerificationReport check_circuit_criteria(const Options& opts);
VerificationReport check_extreme_sets(const Options& opts);
VerificationReport check_combic_skeletons(const Options& opts);
VerificationReport check_fringe(const Options& opts);
VerificationReport check_rootlization(const Options& opts);
VerificationReport check_decomposition(const Options& opts);
VerificationReport check_synthesis(const Options& opts);
VerificationReport check_primal_family(const Options& opts);
VerificationReport check_distance_profiles(const Options& opts);

std::vector<std::string> suite_names();
VerificationReport run_verify_suite(const std::string& suite, const Options& opts);

// Greedy vertex-deletion shrink of a failing instance; the predicate returns
// a witness string while the violation persists.
GraftDocument minimize_witness(
    const GraftDocument& doc,
    const std::function<std::optional<std::string>(const GraftDocument&)>& violation);

std::string report_to_json(const VerificationReport& report);

}  // namespace graft::verify
