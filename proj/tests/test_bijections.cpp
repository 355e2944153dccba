#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qw/bijections.hpp"

using namespace qw;

namespace {
Filling big_f() {
    return Filling::from_rows(
        4, {{1, 1, 2, 1, 2, 1, 2, 4, 4, 3}, {2, 2, 3, 3, 3, 4}, {3, 3, 4, 4}});
}

// The filling whose zcb overlay reproduces big_pop (shares the row sort).
Filling big_f_inv() {
    return Filling::from_rows(
        4, {{2, 1, 1, 1, 3, 2, 1, 4, 4, 2}, {3, 3, 2, 2, 4, 3}, {4, 4, 3, 3}});
}

POP big_pop() {
    POP::OverlayMap ov;
    ov[{1, 1}] = {2, 1, 0};
    ov[{1, 2}] = {2};
    ov[{1, 3}] = {1, 1};
    ov[{2, 2}] = {0, 0, 0};
    ov[{2, 3}] = {1};
    ov[{3, 3}] = {2, 2};
    return POP(GTPattern({{4}, {7, 2}, {8, 5, 2}, {10, 6, 4, 0}}), std::move(ov));
}
}  // namespace

TEST_CASE("running example forward") {
    CHECK(psi_quinv(big_f()) == big_pop());
    CHECK(psi_inv(big_f_inv()) == big_pop());
    CHECK(psi_inv(big_f()) == bcomp(psi_quinv(big_f())));
    CHECK(psi_quinv(big_f()).weight() == quinv(big_f()));
    CHECK(psi_inv(big_f()).weight() == inv(big_f()));
}

TEST_CASE("running example inverse") {
    CHECK(psi_quinv_inverse(big_pop()) == big_f());
    CHECK(psi_inv_inverse(big_pop()) == big_f_inv());
}

TEST_CASE("round trips over small shapes") {
    for (const Partition& lam : partitions_up_to(5))
        for (int n = 1; n <= 3; ++n) {
            for (const Filling& f : enumerate_csf(lam, n)) {
                POP pq = psi_quinv(f), pi = psi_inv(f);
                CHECK(pq.gt() == gt_from_ssyt(rowsort(f)));
                CHECK(pq.weight() == quinv(f));
                CHECK(pi.weight() == inv(f));
                CHECK(pi == bcomp(pq));
                CHECK(psi_quinv_inverse(pq) == f);
                CHECK(psi_inv_inverse(pi) == f);
            }
            for (const POP& p : enumerate_pop(lam, n)) {
                CHECK(psi_quinv(psi_quinv_inverse(p)) == p);
                CHECK(psi_inv(psi_inv_inverse(p)) == p);
            }
        }
}

TEST_CASE("bijectivity of the fibers") {
    // psi_quinv restricted to the fiber of one row sort hits every overlay of
    // its pattern exactly once
    Partition lam{{2, 2, 1}};
    int n = 3;
    std::vector<POP> images;
    for (const Filling& f : enumerate_csf(lam, n)) images.push_back(psi_quinv(f));
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    CHECK(images.size() == enumerate_pop(lam, n).size());
}

TEST_CASE("omega") {
    Filling f = big_f();
    Filling g = omega(f);
    CHECK(inv(g) == quinv(f));
    CHECK(quinv(g) == inv(f));
    CHECK(rowsort(g) == rowsort(f));
    CHECK(omega(g) == f);
    for (const Partition& lam : partitions_up_to(5))
        for (int n = 1; n <= 3; ++n)
            for (const Filling& h : enumerate_csf(lam, n)) {
                Filling w = omega(h);
                CHECK(omega(w) == h);
                CHECK(inv(w) == quinv(h));
                CHECK(quinv(w) == inv(h));
                CHECK(rowsort(w) == rowsort(h));
            }
}
