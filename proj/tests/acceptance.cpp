// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <iostream>

#include "qw/verify.hpp"

int main() {
    struct Item {
        int number;
        const char* suite;
        const char* label;
        int max_cells, max_n, qmax;
    };
    const Item items[] = {
        {1, "expansions", "three expansions agree", 6, 4, 4},
        {2, "worked-example", "running example is reproduced exactly", 6, 4, 4},
        {3, "bijection-roundtrip", "bijections round-trip and the squares commute", 6, 4, 4},
        {4, "fibers", "fiber identities and the area split", 6, 4, 4},
        {5, "omega", "statistic-swapping involution", 6, 4, 4},
        {6, "dsplice", "branching map is confluent; splice relations hold", 6, 4, 4},
        {7, "clbasis", "monomial words cohere across constructions", 6, 4, 4},
        {8, "macdonald", "modified Macdonald variants agree", 5, 3, 4},
        {9, "limit", "truncated vacuum character and branching identity", 6, 4, 4},
        {10, "lattice", "lattice-path readout matches the bijections", 6, 4, 4},
    };
    bool ok = true;
    for (const Item& it : items) {
        qw::VerifyResult r;
        try {
            r = qw::run_suite(it.suite, it.max_cells, it.max_n, it.qmax);
        } catch (const std::exception& e) {
            r.passed = false;
            r.counterexample = e.what();
        }
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << it.number << ": " << it.label
                  << " (" << r.cases_checked << " cases)" << std::endl;
        if (!r.passed) {
            ok = false;
            std::cerr << r.counterexample << std::endl;
        }
    }
    return ok ? 0 : 1;
}
