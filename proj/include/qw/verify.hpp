#ifndef QW_VERIFY_HPP
#define QW_VERIFY_HPP

#include <string>
#include <vector>

namespace qw {

struct VerifyResult {
    std::string suite;
    bool passed = false;
    long cases_checked = 0;
    /// First counterexample serialized as JSON, empty when passed.
    std::string counterexample;
};

/// Named identity suites over exhaustive small ranges. Each stops at the
/// first failure and records the witness.
VerifyResult verify_expansions(int max_cells, int max_n);
VerifyResult verify_worked_example();
VerifyResult verify_roundtrips(int max_cells, int max_n);
VerifyResult verify_fibers(int max_cells, int max_n);
VerifyResult verify_omega(int max_cells, int max_n);
VerifyResult verify_dsplice(int max_cells, int max_n);
VerifyResult verify_clbasis(int max_cells, int max_n);
VerifyResult verify_macdonald(int max_cells, int max_n);
VerifyResult verify_limit(int max_n, int qmax);
VerifyResult verify_lattice(int max_cells, int max_n);

/// All suites above, in order.
std::vector<VerifyResult> verify_all(int max_cells, int max_n, int qmax);

/// Look up one suite by CLI name ("expansions", "worked-example",
/// "bijection-roundtrip", "fibers", "omega", "dsplice", "clbasis",
/// "macdonald", "limit", "lattice"); throws on unknown name.
VerifyResult run_suite(const std::string& name, int max_cells, int max_n, int qmax);

std::vector<std::string> suite_names();

}  // namespace qw

#endif
