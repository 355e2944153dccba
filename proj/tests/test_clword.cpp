#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qw/clword.hpp"

using namespace qw;

namespace {
Filling small_f() { return Filling::from_rows(4, {{1, 2, 1, 2}, {3, 4}}); }

Filling big_f() {
    return Filling::from_rows(
        4, {{1, 1, 2, 1, 2, 1, 2, 4, 4, 3}, {2, 2, 3, 3, 3, 4}, {3, 3, 4, 4}});
}
}  // namespace

TEST_CASE("word canonical form") {
    CLWord w({{4, 2, 1}, {2, 1, 1}, {3, 2, 0}, {2, 1, 2}});
    REQUIRE(w.atoms().size() == 4);
    CHECK(w.atoms()[0] == CLAtom{2, 1, 2});
    CHECK(w.atoms()[1] == CLAtom{2, 1, 1});
    CHECK(w.atoms()[2] == CLAtom{3, 2, 0});
    CHECK(w.atoms()[3] == CLAtom{4, 2, 1});
    CHECK(w.total_t_degree() == 4);
    CHECK(w == CLWord({{2, 1, 1}, {2, 1, 2}, {4, 2, 1}, {3, 2, 0}}));
    CHECK_THROWS(CLWord({{1, 1, 0}}));   // needs p > q
    CHECK_THROWS(CLWord({{2, 1, -1}}));  // t exponent must be >= 0
}

TEST_CASE("to_string") {
    CHECK(CLWord({{2, 1, 2}, {2, 1, 1}, {3, 2, 0}}).to_string() ==
          "(E_{2,1} (x) t^2)(E_{2,1} (x) t)(E_{3,2} (x) t^0)");
    CHECK(CLWord{}.to_string() == "1");
}

TEST_CASE("reference words") {
    CHECK(b_stat(small_f(), false) == CLWord({{2, 1, 2}, {2, 1, 1}, {3, 2, 0}, {4, 2, 1}}));
    CHECK(b_stat(small_f(), true) == CLWord({{2, 1, 1}, {2, 1, 0}, {3, 2, 0}, {4, 2, 0}}));
    CHECK(b_stat(big_f(), false) ==
          CLWord({{2, 1, 2},
                  {2, 1, 1},
                  {2, 1, 0},
                  {3, 1, 2},
                  {4, 1, 1},
                  {4, 1, 1},
                  {3, 2, 0},
                  {3, 2, 0},
                  {3, 2, 0},
                  {4, 2, 1},
                  {4, 3, 2},
                  {4, 3, 2}}));
}

TEST_CASE("word from pop matches word from filling") {
    for (const Partition& lam : partitions_up_to(5))
        for (int n = 1; n <= 3; ++n)
            for (const Filling& f : enumerate_csf(lam, n))
                for (bool use_inv : {false, true}) {
                    CLWord w = b_stat(f, use_inv);
                    CHECK(w == cl_monomial(psi(f, use_inv)));
                    CHECK(w.total_t_degree() == (use_inv ? inv(f) : quinv(f)));
                    // one atom per cell lying strictly below its entry's row
                    long expected_atoms = 0;
                    for (int i = 1; i <= f.num_rows(); ++i)
                        for (Cell c : f.row_cells(i))
                            if (f.entry(c) > i) ++expected_atoms;
                    CHECK(static_cast<long>(w.atoms().size()) == expected_atoms);
                }
}

TEST_CASE("the word determines the filling on a fixed shape") {
    for (const Partition& lam : partitions_up_to(5))
        for (bool use_inv : {false, true}) {
            std::vector<CLWord> seen;
            for (const Filling& f : enumerate_csf(lam, 3)) {
                CLWord w = b_stat(f, use_inv);
                for (const CLWord& pw : seen) CHECK(!(pw == w));
                seen.push_back(w);
            }
        }
}
