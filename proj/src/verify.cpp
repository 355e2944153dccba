#include "qw/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qw/bijections.hpp"
#include "qw/characters.hpp"
#include "qw/clword.hpp"
#include "qw/filling.hpp"
#include "qw/gt.hpp"
#include "qw/json_io.hpp"
#include "qw/lattice.hpp"
#include "qw/partition.hpp"
#include "qw/splice.hpp"

namespace qw {

namespace {

json fail_witness(const Partition& lambda, int n, const std::string& detail) {
    return json{{"shape", to_json(lambda)}, {"n", n}, {"detail", detail}};
}

json fail_witness(const Filling& f, const std::string& detail) {
    return json{{"filling", to_json(f)}, {"detail", detail}};
}

VerifyResult pass(const std::string& suite, long cases) {
    return VerifyResult{suite, true, cases, ""};
}

VerifyResult fail(const std::string& suite, long cases, const json& witness) {
    return VerifyResult{suite, false, cases, witness.dump()};
}

// Reference data from the running example: the 3-row filling on the shape
// (10,6,4) with n=4, its pattern and both overlays.
Filling example_f() {
    return Filling::from_rows(
        4, {{1, 1, 2, 1, 2, 1, 2, 4, 4, 3}, {2, 2, 3, 3, 3, 4}, {3, 3, 4, 4}});
}

Filling example_f_inv_preimage() {
    return Filling::from_rows(
        4, {{2, 1, 1, 1, 3, 2, 1, 4, 4, 2}, {3, 3, 2, 2, 4, 3}, {4, 4, 3, 3}});
}

GTPattern example_t() {
    return GTPattern({{4}, {7, 2}, {8, 5, 2}, {10, 6, 4, 0}});
}

POP example_pop() {
    POP::OverlayMap ov;
    ov[{1, 1}] = {2, 1, 0};
    ov[{1, 2}] = {2};
    ov[{1, 3}] = {1, 1};
    ov[{2, 2}] = {0, 0, 0};
    ov[{2, 3}] = {1};
    ov[{3, 3}] = {2, 2};
    return POP(example_t(), std::move(ov));
}

}  // namespace

VerifyResult verify_expansions(int max_cells, int max_n) {
    const std::string suite = "expansions";
    long cases = 0;
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            QXPoly wi = whittaker(lambda, n, WhittakerMethod::Inv);
            QXPoly wq = whittaker(lambda, n, WhittakerMethod::Quinv);
            QXPoly wf = whittaker(lambda, n, WhittakerMethod::Fermionic);
            ++cases;
            if (!(wi == wq) || !(wi == wf))
                return fail(suite, cases,
                            fail_witness(lambda, n, "expansion methods disagree"));
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_worked_example() {
    const std::string suite = "worked-example";
    Filling f = example_f();
    POP expected = example_pop();
    if (quinv(f) != 12)
        return fail(suite, 1, fail_witness(f, "quinv != 12"));
    if (inv(f) != 5)
        return fail(suite, 2, fail_witness(f, "inv != 5"));
    if (!(psi_quinv(f) == expected))
        return fail(suite, 3, fail_witness(f, "psi_quinv disagrees with reference overlay"));
    if (!(psi_quinv_inverse(expected) == f))
        return fail(suite, 4, fail_witness(f, "psi_quinv_inverse disagrees with reference filling"));
    if (!(psi_inv_inverse(expected) == example_f_inv_preimage()))
        return fail(suite, 5, fail_witness(f, "psi_inv_inverse disagrees with reference filling"));
    return pass(suite, 5);
}

VerifyResult verify_roundtrips(int max_cells, int max_n) {
    const std::string suite = "bijection-roundtrip";
    long cases = 0;
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            GTPattern rsort_gt{};
            for (const Filling& f : enumerate_csf(lambda, n)) {
                ++cases;
                for (bool use_inv : {false, true}) {
                    POP p = psi(f, use_inv);
                    if (!(psi_inverse(p, use_inv) == f))
                        return fail(suite, cases, fail_witness(f, "psi round-trip failed"));
                    if (!(pr(p) == gt_from_ssyt(rowsort(f))))
                        return fail(suite, cases, fail_witness(f, "projection square failed"));
                    if (n >= 2 && !(psi(dsplice(f), use_inv) == br(p)))
                        return fail(suite, cases, fail_witness(f, "branching square failed"));
                }
                if (!(psi_quinv(f) == bcomp(psi_inv(f))))
                    return fail(suite, cases, fail_witness(f, "complement square failed"));
            }
            for (const POP& p : enumerate_pop(lambda, n)) {
                ++cases;
                for (bool use_inv : {false, true})
                    if (!(psi(psi_inverse(p, use_inv), use_inv) == p))
                        return fail(suite, cases,
                                    fail_witness(lambda, n, "psi_inverse round-trip failed"));
            }
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_fibers(int max_cells, int max_n) {
    const std::string suite = "fibers";
    long cases = 0;
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            std::map<Filling, std::pair<QXPoly, QXPoly>> fibers;
            for (const Filling& f : enumerate_csf(lambda, n)) {
                ++cases;
                Filling t = rowsort(f);
                long a = area(gt_from_ssyt(t));
                if (inv(f) + quinv(f) != a)
                    return fail(suite, cases, fail_witness(f, "inv + quinv != area"));
                auto it = fibers.try_emplace(t, QXPoly(0), QXPoly(0)).first;
                it->second.first += QXPoly::q_power(0, static_cast<int>(inv(f)));
                it->second.second += QXPoly::q_power(0, static_cast<int>(quinv(f)));
            }
            for (const auto& [t, sums] : fibers) {
                QXPoly w = wt_q(gt_from_ssyt(t));
                if (!(sums.first == w) || !(sums.second == w))
                    return fail(suite, cases, fail_witness(t, "fiber sum != wt_q"));
            }
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_omega(int max_cells, int max_n) {
    const std::string suite = "omega";
    long cases = 0;
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            for (const Filling& f : enumerate_csf(lambda, n)) {
                ++cases;
                Filling g = omega(f);
                if (!(omega(g) == f))
                    return fail(suite, cases, fail_witness(f, "omega not an involution"));
                if (inv(g) != quinv(f) || quinv(g) != inv(f))
                    return fail(suite, cases, fail_witness(f, "omega does not swap inv and quinv"));
                if (!(rowsort(g) == rowsort(f)))
                    return fail(suite, cases, fail_witness(f, "omega changed rowsort"));
            }
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_dsplice(int max_cells, int max_n) {
    const std::string suite = "dsplice";
    long cases = 0;
    // reference example: n = 6, shape (10,7,5,2)
    {
        Filling f = Filling::from_rows(6, {{1, 1, 2, 1, 2, 3, 2, 4, 6, 5},
                                           {2, 2, 3, 2, 3, 6, 3, 5},
                                           {4, 3, 4, 6, 5},
                                           {6, 4, 5}});
        Filling expected = Filling::from_rows(5, {{1, 1, 2, 1, 2, 2, 3, 4, 5},
                                                  {2, 2, 3, 2, 3, 3, 5},
                                                  {3, 4, 4, 5},
                                                  {4, 5}});
        ++cases;
        if (!(dsplice(f) == expected))
            return fail(suite, cases, fail_witness(f, "reference dsplice value mismatch"));
        ++cases;
        if (!dsplice_confluent(f))
            return fail(suite, cases, fail_witness(f, "reference dsplice not confluent"));
    }
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            for (const Filling& f : enumerate_csf(lambda, n)) {
                ++cases;
                if (!dsplice_confluent(f))
                    return fail(suite, cases, fail_witness(f, "dsplice not confluent"));
                Filling d = dsplice(f);
                if (!interlaces(d.partition_shape(), lambda))
                    return fail(suite, cases, fail_witness(f, "dsplice shape does not interlace"));
            }
            // braid and commutation relations on all column orders
            for (const ColumnComposition& gamma : column_compositions_of(lambda)) {
                int m = gamma.num_columns();
                for (const Filling& f : enumerate_csf(gamma, n)) {
                    ++cases;
                    for (int i = 1; i + 1 < m; ++i) {
                        Filling lhs = s_i(i, s_i(i + 1, s_i(i, f)));
                        Filling rhs = s_i(i + 1, s_i(i, s_i(i + 1, f)));
                        if (!(lhs == rhs))
                            return fail(suite, cases, fail_witness(f, "braid relation failed"));
                    }
                    for (int i = 1; i < m; ++i)
                        for (int j = i + 2; j < m; ++j)
                            if (!(s_i(i, s_i(j, f)) == s_i(j, s_i(i, f))))
                                return fail(suite, cases,
                                            fail_witness(f, "commutation relation failed"));
                }
            }
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_clbasis(int max_cells, int max_n) {
    const std::string suite = "clbasis";
    long cases = 0;
    // reference words: the 2-row example on (4,2) with n=4
    {
        Filling f = Filling::from_rows(4, {{1, 2, 1, 2}, {3, 4}});
        CLWord bq = b_stat(f, false);
        CLWord bi = b_stat(f, true);
        CLWord eq(std::vector<CLAtom>{{2, 1, 2}, {2, 1, 1}, {3, 2, 0}, {4, 2, 1}});
        CLWord ei(std::vector<CLAtom>{{2, 1, 1}, {2, 1, 0}, {3, 2, 0}, {4, 2, 0}});
        ++cases;
        if (!(bq == eq) || !(bi == ei))
            return fail(suite, cases, fail_witness(f, "reference CL words mismatch"));
    }
    {
        Filling f = example_f();
        CLWord eq(std::vector<CLAtom>{{2, 1, 2}, {2, 1, 1}, {2, 1, 0}, {3, 1, 2},
                                      {4, 1, 1}, {4, 1, 1}, {3, 2, 0}, {3, 2, 0},
                                      {3, 2, 0}, {4, 2, 1}, {4, 3, 2}, {4, 3, 2}});
        ++cases;
        if (!(b_stat(f, false) == eq))
            return fail(suite, cases, fail_witness(f, "large reference CL word mismatch"));
    }
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            // fiber constancy of positional zcount+zcb
            std::map<Filling, std::map<std::pair<int, int>, std::vector<int>>> fiber_sums;
            for (const Filling& f : enumerate_csf(lambda, n)) {
                ++cases;
                for (bool use_inv : {false, true})
                    if (!(b_stat(f, use_inv) == cl_monomial(psi(f, use_inv))))
                        return fail(suite, cases, fail_witness(f, "b_stat != cl_monomial(psi)"));
                if (b_stat(f, false).total_t_degree() != quinv(f) ||
                    b_stat(f, true).total_t_degree() != inv(f))
                    return fail(suite, cases, fail_witness(f, "CL word t-degree mismatch"));
                std::map<std::pair<int, int>, std::vector<int>> sums;
                for (int j = 1; j < n; ++j)
                    for (int i = 1; i <= j; ++i) {
                        std::vector<int> s;
                        for (Cell c : cells_with_entry(i, j, f))
                            s.push_back(zcount(c, f) + zcb(c, f));
                        sums[{i, j}] = std::move(s);
                    }
                auto [it, fresh] = fiber_sums.try_emplace(rowsort(f), sums);
                if (!fresh && it->second != sums)
                    return fail(suite, cases, fail_witness(f, "zcount+zcb not fiber constant"));
            }
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_macdonald(int max_cells, int max_n) {
    const std::string suite = "macdonald";
    long cases = 0;
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            ++cases;
            TPoly hi = modified_macdonald(lambda, n, true);
            TPoly hq = modified_macdonald(lambda, n, false);
            if (!(hi == hq))
                return fail(suite, cases, fail_witness(lambda, n, "inv and quinv variants disagree"));
            QXPoly top = hi.t_coefficient(static_cast<int>(n_stat(lambda)));
            if (!(top == whittaker(lambda, n, WhittakerMethod::Inv)))
                return fail(suite, cases,
                            fail_witness(lambda, n, "top t-coefficient differs from whittaker"));
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_limit(int max_n, int qmax) {
    const std::string suite = "limit";
    long cases = 0;
    for (int n = 2; n <= std::min(max_n, 3); ++n) {
        for (int D = 0; D <= qmax; ++D) {
            ++cases;
            int K = stabilized_K(Partition{}, n, D);
            QXPoly lhs = chi_via_csf(Partition{}, n, K, D);
            QXPoly rhs = chi_lambda0_truncated(n, D);
            if (!(lhs == rhs))
                return fail(suite, cases,
                            fail_witness(Partition{}, n,
                                         "CSF character differs from theta/eta at degree " +
                                             std::to_string(D)));
        }
    }
    for (const Partition& lambda : partitions_up_to(6)) {
        for (int n = 2; n <= std::min(max_n, 4); ++n) {
            ++cases;
            if (!branching_check(lambda, n))
                return fail(suite, cases, fail_witness(lambda, n, "branching identity failed"));
        }
    }
    return pass(suite, cases);
}

VerifyResult verify_lattice(int max_cells, int max_n) {
    const std::string suite = "lattice";
    long cases = 0;
    {
        Filling f = example_f();
        auto circles = mark_circles(declutter(build_ensemble(f)));
        long solid = 0, open = 0;
        for (const auto& [key, marks] : circles) {
            solid += static_cast<long>(marks.solid.size());
            open += static_cast<long>(marks.open.size());
        }
        ++cases;
        if (solid != 12 || open != 5)
            return fail(suite, cases, fail_witness(f, "reference circle totals mismatch"));
    }
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        for (int n = 1; n <= max_n; ++n) {
            for (const Filling& f : enumerate_csf(lambda, n)) {
                ++cases;
                LatticeEnsemble e = declutter(build_ensemble(f));
                GTPattern t = gt_from_ssyt(rowsort(f));
                for (int j = 1; j < n; ++j)
                    for (int i = 1; i <= j; ++i) {
                        const TileProfile& prof = e.tile(TileKey{i, j + 1});
                        if (static_cast<int>(prof.type2.size()) != ne(t, i, j) ||
                            static_cast<int>(prof.type1.size()) != se(t, i, j))
                            return fail(suite, cases, fail_witness(f, "tile counts mismatch"));
                    }
                auto [pq, pi] = extract_overlays(e);
                if (!(pq == psi_quinv(f)) || !(pi == psi_inv(f)))
                    return fail(suite, cases, fail_witness(f, "extracted overlays mismatch"));
            }
        }
    }
    return pass(suite, cases);
}

std::vector<VerifyResult> verify_all(int max_cells, int max_n, int qmax) {
    return {verify_expansions(max_cells, max_n),
            verify_worked_example(),
            verify_roundtrips(max_cells, max_n),
            verify_fibers(max_cells, max_n),
            verify_omega(max_cells, max_n),
            verify_dsplice(max_cells, max_n),
            verify_clbasis(max_cells, max_n),
            verify_macdonald(std::min(max_cells, 5), std::min(max_n, 3)),
            verify_limit(max_n, qmax),
            verify_lattice(max_cells, max_n)};
}

std::vector<std::string> suite_names() {
    return {"expansions", "worked-example", "bijection-roundtrip", "fibers", "omega",
            "dsplice",    "clbasis",        "macdonald",           "limit",  "lattice"};
}

VerifyResult run_suite(const std::string& name, int max_cells, int max_n, int qmax) {
    if (name == "expansions") return verify_expansions(max_cells, max_n);
    if (name == "worked-example") return verify_worked_example();
    if (name == "bijection-roundtrip") return verify_roundtrips(max_cells, max_n);
    if (name == "fibers") return verify_fibers(max_cells, max_n);
    if (name == "omega") return verify_omega(max_cells, max_n);
    if (name == "dsplice") return verify_dsplice(max_cells, max_n);
    if (name == "clbasis") return verify_clbasis(max_cells, max_n);
    if (name == "macdonald") return verify_macdonald(std::min(max_cells, 5), std::min(max_n, 3));
    if (name == "limit") return verify_limit(max_n, qmax);
    if (name == "lattice") return verify_lattice(max_cells, max_n);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qw
