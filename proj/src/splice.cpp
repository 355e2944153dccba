#include "qw/splice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qw {

namespace {

int value_at(const ColumnTuple& t, int i) {
    // virtual t_0 = 0
    return i == 0 ? 0 : t[i - 1];
}

void check_tuple(const ColumnTuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] >= t[i + 1]) throw std::invalid_argument("column tuple not strictly increasing");
    if (!t.empty() && t[0] < 1) throw std::invalid_argument("column tuple entries must be positive");
}

}  // namespace

int splice_index(const ColumnTuple& sigma, const ColumnTuple& tau) {
    check_tuple(sigma);
    check_tuple(tau);
    int k = static_cast<int>(sigma.size());
    if (k >= static_cast<int>(tau.size()))
        throw std::invalid_argument("splice_index: left tuple must be shorter");
    int m = 0;
    for (int i = 1; i <= k + 1; ++i)
        if (value_at(sigma, i - 1) < tau[i - 1]) m = i;
    return m;
}

SpliceResult elementary_splice(const ColumnTuple& sigma, const ColumnTuple& tau) {
    check_tuple(sigma);
    check_tuple(tau);
    if (sigma.size() == tau.size()) return SpliceResult{sigma, tau, 0, false};
    if (sigma.size() < tau.size()) {
        int m = splice_index(sigma, tau);
        ColumnTuple a(sigma.begin(), sigma.begin() + (m - 1));
        a.insert(a.end(), tau.begin() + (m - 1), tau.end());
        ColumnTuple b(tau.begin(), tau.begin() + (m - 1));
        b.insert(b.end(), sigma.begin() + (m - 1), sigma.end());
        return SpliceResult{std::move(a), std::move(b), m, false};
    }
    // longer-left case: swap, splice, swap back
    SpliceResult r = elementary_splice(tau, sigma);
    return SpliceResult{std::move(r.second), std::move(r.first), r.m, true};
}

SpliceCellMap splice_cell_map(const ColumnTuple& sigma, const ColumnTuple& tau) {
    SpliceCellMap map;
    if (sigma.size() == tau.size()) {
        for (std::size_t p = 1; p <= sigma.size(); ++p)
            map.from_first.emplace_back(1, static_cast<int>(p));
        for (std::size_t p = 1; p <= tau.size(); ++p)
            map.from_second.emplace_back(2, static_cast<int>(p));
        return map;
    }
    bool reversed = sigma.size() > tau.size();
    int m = reversed ? splice_index(tau, sigma) : splice_index(sigma, tau);
    // positions < m stay; positions >= m move to the same position of the
    // other column.
    auto place = [&](int col, int len) {
        std::vector<std::pair<int, int>> out;
        for (int p = 1; p <= len; ++p)
            out.emplace_back(p < m ? col : 3 - col, p);
        return out;
    };
    map.from_first = place(1, static_cast<int>(sigma.size()));
    map.from_second = place(2, static_cast<int>(tau.size()));
    return map;
}

Filling s_i(int i, const Filling& f) {
    if (i < 1 || i >= f.num_columns()) throw std::out_of_range("s_i: column index out of range");
    if (!f.is_column_strict()) throw std::invalid_argument("s_i: filling not column strict");
    auto cols = f.columns();
    SpliceResult r = elementary_splice(cols[i - 1], cols[i]);
    cols[i - 1] = std::move(r.first);
    cols[i] = std::move(r.second);
    return Filling(f.n(), std::move(cols));
}

namespace {

Filling delete_entry_n(const Filling& f) {
    std::vector<std::vector<int>> cols;
    for (const auto& col : f.columns()) {
        std::vector<int> kept;
        for (int e : col)
            if (e != f.n()) kept.push_back(e);
        cols.push_back(std::move(kept));
    }
    return Filling(std::max(f.n() - 1, 0), std::move(cols));
}

std::vector<int> legal_splices(const Filling& f) {
    std::vector<int> out;
    for (int j = 1; j < f.num_columns(); ++j)
        if (f.column(j).size() < f.column(j + 1).size()) out.push_back(j);
    return out;
}

Filling drop_empty_columns(const Filling& f) {
    std::vector<std::vector<int>> cols;
    for (const auto& col : f.columns())
        if (!col.empty()) cols.push_back(col);
    return Filling(f.n(), std::move(cols));
}

}  // namespace

Filling dsplice_traced(const Filling& f, std::vector<DspliceStep>& trace) {
    if (!f.is_partition_shape()) throw std::invalid_argument("dsplice: non-partition shape");
    if (!f.is_column_strict()) throw std::invalid_argument("dsplice: filling not column strict");
    Filling cur = delete_entry_n(f);
    for (;;) {
        auto legal = legal_splices(cur);
        if (legal.empty()) break;
        cur = s_i(legal.front(), cur);
        trace.push_back(DspliceStep{legal.front(), cur.shape().column_lengths()});
    }
    return drop_empty_columns(cur);
}

Filling dsplice(const Filling& f) {
    std::vector<DspliceStep> trace;
    return dsplice_traced(f, trace);
}

bool dsplice_confluent(const Filling& f, std::size_t max_states) {
    if (!f.is_partition_shape()) throw std::invalid_argument("dsplice: non-partition shape");
    if (!f.is_column_strict()) throw std::invalid_argument("dsplice: filling not column strict");
    Filling start = delete_entry_n(f);
    std::set<Filling> seen, finals;
    std::vector<Filling> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        if (seen.size() > max_states) throw std::runtime_error("dsplice_confluent: budget exceeded");
        Filling cur = stack.back();
        stack.pop_back();
        auto legal = legal_splices(cur);
        if (legal.empty()) {
            finals.insert(drop_empty_columns(cur));
            continue;
        }
        for (int j : legal) {
            Filling next = s_i(j, cur);
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return finals.size() == 1;
}

}  // namespace qw
