#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qw/partition.hpp"

using namespace qw;

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{{10, 6, 4}}) == Partition{{3, 3, 3, 3, 2, 2, 1, 1, 1, 1}});
    CHECK(conjugate(Partition{{2, 1}}) == Partition{{2, 1}});
    for (const Partition& p : partitions_up_to(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("interlacing") {
    CHECK(interlaces(Partition{{9, 7, 4, 2}}, Partition{{10, 7, 5, 2}}));
    CHECK(interlaces(Partition{{3, 1}}, Partition{{3, 1}}));
    CHECK_FALSE(interlaces(Partition{{3}}, Partition{{2, 1}}));
    // interlacing iff the deleted cells form a horizontal strip
    for (const Partition& lam : partitions_up_to(6)) {
        for (const Partition& mu : partitions_up_to(6)) {
            bool strip = true;
            if (mu.num_parts() > lam.num_parts()) strip = false;
            for (int i = 1; strip && i <= mu.num_parts(); ++i)
                if (mu.part(i) > lam.part(i)) strip = false;
            if (strip) {
                Partition lc = conjugate(lam), mc = conjugate(mu);
                for (int j = 1; j <= lc.num_parts(); ++j)
                    if (lc.part(j) - mc.part(j) > 1) strip = false;
            }
            CHECK(interlaces(mu, lam) == strip);
        }
    }
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Partition{}) == 0);
    CHECK(n_stat(Partition{{10, 6, 4}}) == 14);
    CHECK(n_stat(Partition{{1, 1, 1}}) == 3);
}

TEST_CASE("arm coarm leg") {
    CHECK(arm(Cell{1, 1}, Partition{{3}}) == 2);
    CHECK(coarm(Cell{1, 3}, Partition{{3}}) == 2);
    CHECK(leg(Cell{1, 1}, Partition{{1, 1, 1}}) == 2);
    CHECK_THROWS(arm(Cell{2, 1}, Partition{{3}}));
    for (const Partition& p : partitions_up_to(6))
        for (int i = 1; i <= p.num_parts(); ++i)
            for (int j = 1; j <= p.part(i); ++j)
                CHECK(arm(Cell{i, j}, p) + coarm(Cell{i, j}, p) + 1 == p.part(i));
}

TEST_CASE("column compositions") {
    ColumnComposition c({3, 2, 3});
    CHECK_FALSE(c.is_partition_shape());
    CHECK(c.sorted_partition_of_columns() == Partition{{3, 3, 2}});
    CHECK(column_compositions_of(Partition{{2, 2, 1}}).size() == 2);  // columns {3,2}
    CHECK(column_compositions_of(Partition{}).size() == 1);
}

TEST_CASE("enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_up_to(6).size() == 30);
    auto il = interlacing_partitions(Partition{{2, 1}});
    CHECK(il.size() == 4);  // (2,1),(2),(1,1),(1)
    for (const auto& mu : il) CHECK(interlaces(mu, Partition{{2, 1}}));
}
