#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qw/filling.hpp"
#include "qw/gt.hpp"

using namespace qw;

namespace {
long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// Running example: shape (10,6,4), n = 4.
Filling big_f() {
    return Filling::from_rows(
        4, {{1, 1, 2, 1, 2, 1, 2, 4, 4, 3}, {2, 2, 3, 3, 3, 4}, {3, 3, 4, 4}});
}
}  // namespace

TEST_CASE("construction and accessors") {
    Filling f = big_f();
    CHECK(f.n() == 4);
    CHECK(f.num_cells() == 20);
    CHECK(f.partition_shape() == Partition{{10, 6, 4}});
    CHECK(f.entry(Cell{1, 7}) == 2);
    CHECK(f.entry(Cell{3, 4}) == 4);
    CHECK(f.is_column_strict());
    CHECK_THROWS(f.entry(Cell{4, 1}));
    CHECK_THROWS(Filling(2, {{3}}));
    CHECK_THROWS(Filling::from_rows(3, {{1}, {2, 3}}));
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_csf(Partition{{1}}, 2).size() == 2);
    auto cs = enumerate_csf(Partition{{2}}, 2);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Filling::from_rows(2, {{1, 1}}));
    CHECK(cs[1] == Filling::from_rows(2, {{1, 2}}));
    CHECK(cs[2] == Filling::from_rows(2, {{2, 1}}));
    CHECK(cs[3] == Filling::from_rows(2, {{2, 2}}));
    CHECK(enumerate_csf(Partition{{1, 1, 1}}, 2).empty());
    CHECK(enumerate_fillings(Partition{{1}}, 3).size() == 3);
    CHECK(enumerate_fillings(Partition{{2, 1}}, 2).size() == 8);
    CHECK(enumerate_fillings(Partition{}, 5).size() == 1);
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_up_to(5)) {
            long expected = 1;
            Partition conj = conjugate(lam);
            for (int c : conj.parts()) expected *= binom(n, c);
            CHECK(static_cast<long>(enumerate_csf(lam, n).size()) == expected);
        }
}

TEST_CASE("x_weight") {
    Monomial m{0, 0, {4, 5, 6, 5}};
    CHECK(x_weight(big_f()) == QXPoly::monomial(4, m));
    CHECK(x_weight(Filling(3, {})) == QXPoly::one(3));
}

TEST_CASE("descents and maj") {
    Filling col = Filling(2, {{1, 2}});
    CHECK(maj(col) == 1);
    Filling flat = Filling::from_rows(1, {{1, 1, 1}});
    CHECK(descents(flat).empty());
    CHECK(maj(flat) == 0);
    // maj is maximal exactly on column strict fillings
    for (const Partition& lam : partitions_up_to(5))
        for (int n = 1; n <= 3; ++n)
            for (const Filling& f : enumerate_fillings(lam, n))
                CHECK((maj(f) == n_stat(lam)) == f.is_column_strict());
}

TEST_CASE("inv and quinv") {
    CHECK(inv(Filling::from_rows(2, {{2, 1}})) == 1);
    CHECK(quinv(Filling::from_rows(2, {{2, 1}})) == 0);
    CHECK(quinv(Filling::from_rows(2, {{1, 2}})) == 1);
    CHECK(inv(big_f()) == 5);
    CHECK(quinv(big_f()) == 12);
    // quinv equals the triple count on CSFs
    for (const Partition& lam : partitions_up_to(5))
        for (int n = 1; n <= 3; ++n)
            for (const Filling& f : enumerate_csf(lam, n)) {
                CHECK(quinv(f) == static_cast<long>(quinv_triples(f).size()));
                CHECK(inv(f) == refinv(f));
            }
}

TEST_CASE("triples and cellwise counts") {
    Filling f = big_f();
    CHECK(quinv_triples(Filling(4, {{1, 3, 4}})).empty());
    CHECK(quinv_triples(Filling::from_rows(4, {{1, 2, 1, 2}, {3, 4}})).size() == 4);
    CHECK(quinv_triples(f).size() == 12);
    CHECK(refinv_triples(f).size() == 5);
    CHECK(zcount(Cell{1, 7}, f) == 2);
    // reference zcount table, rows top to bottom
    std::vector<std::vector<int>> zc = {{0, 0, 0, 0, 1, 0, 2, 1, 1, 2}, {0, 0, 0, 0, 0, 1}, {0, 0, 2, 2}};
    for (int i = 1; i <= 3; ++i)
        for (Cell c : f.row_cells(i)) CHECK(zcount(c, f) == zc[i - 1][c.col - 1]);
    CHECK(zcb(Cell{1, 2}, Filling::from_rows(4, {{1, 2, 1, 2}, {3, 4}})) == 1);
    long total = 0;
    for (int i = 1; i <= 3; ++i)
        for (Cell c : f.row_cells(i)) total += zcb(c, f);
    CHECK(total == inv(f));
    // zcount monotone left to right, zcb antitone
    for (int n = 1; n <= 3; ++n)
        for (const Partition& lam : partitions_up_to(5))
            for (const Filling& g : enumerate_csf(lam, n))
                for (int j = 0; j < n; ++j)
                    for (int i = 1; i <= j + 1; ++i) {
                        auto cells = cells_with_entry(i, j, g);
                        for (std::size_t p = 0; p + 1 < cells.size(); ++p) {
                            CHECK(zcount(cells[p], g) <= zcount(cells[p + 1], g));
                            CHECK(zcb(cells[p], g) >= zcb(cells[p + 1], g));
                        }
                    }
}

TEST_CASE("cells_with_entry") {
    Filling f = big_f();
    auto ones = cells_with_entry(1, 0, f);
    REQUIRE(ones.size() == 4);
    CHECK(ones[0].col == 1);
    CHECK(ones[1].col == 2);
    CHECK(ones[2].col == 4);
    CHECK(ones[3].col == 6);
    auto twos = cells_with_entry(1, 1, f);
    REQUIRE(twos.size() == 3);
    CHECK(twos[0].col == 3);
    CHECK(twos[1].col == 5);
    CHECK(twos[2].col == 7);
    CHECK(cells_with_entry(1, 2, Filling::from_rows(4, {{1, 2}})).empty());
    CHECK_THROWS(cells_with_entry(2, 0, f));
}

TEST_CASE("rowsort") {
    Filling f = Filling::from_rows(6, {{4, 1, 2, 1}, {5, 4, 3}, {6, 5}});
    CHECK(rowsort(f) == Filling::from_rows(6, {{1, 1, 2, 4}, {3, 4, 5}, {5, 6}}));
    Filling s = rowsort(big_f());
    CHECK(s == Filling::from_rows(4, {{1, 1, 1, 1, 2, 2, 2, 3, 4, 4}, {2, 2, 3, 3, 3, 4}, {3, 3, 4, 4}}));
    CHECK(is_ssyt(s));
    CHECK(rowsort(s) == s);
    // zero statistics exactly on row-sorted fillings
    for (const Partition& lam : partitions_up_to(5))
        for (const Filling& g : enumerate_csf(lam, 3))
            CHECK((inv(g) == 0) == (g == rowsort(g)));
}
