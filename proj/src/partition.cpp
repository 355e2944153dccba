#include "qw/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qw {

Partition ColumnComposition::sorted_partition_of_columns() const {
    std::vector<int> v = lengths_;
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    int cols = lambda.part(1);
    out.reserve(cols);
    for (int j = 1; j <= cols; ++j) {
        int cnt = 0;
        for (int p : lambda.parts())
            if (p >= j) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

bool interlaces(const Partition& mu, const Partition& lambda) {
    int k = std::max(mu.num_parts(), lambda.num_parts());
    for (int i = 1; i <= k; ++i)
        if (!(lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1))) return false;
    return true;
}

long n_stat(const Partition& lambda) {
    long s = 0;
    Partition conj = conjugate(lambda);
    for (int c : conj.parts()) s += static_cast<long>(c) * (c - 1) / 2;
    return s;
}

bool contains(const Partition& lambda, Cell c) {
    return c.row >= 1 && c.col >= 1 && c.col <= lambda.part(c.row);
}

static void require_cell(const Partition& lambda, Cell c) {
    if (!contains(lambda, c)) throw std::out_of_range("cell outside shape");
}

int arm(Cell c, const Partition& lambda) {
    require_cell(lambda, c);
    return lambda.part(c.row) - c.col;
}

int coarm(Cell c, const Partition& lambda) {
    require_cell(lambda, c);
    return c.col - 1;
}

int leg(Cell c, const Partition& lambda) {
    require_cell(lambda, c);
    int cnt = 0;
    for (int i = c.row + 1; lambda.part(i) >= c.col; ++i) ++cnt;
    return cnt;
}

static void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out, bool exact) {
    if (!exact || remaining == 0) out.push_back(Partition(cur));
    if (exact && remaining == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out, exact);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    for (int m = 0; m <= max_cells; ++m) {
        auto pm = partitions_of(m);
        out.insert(out.end(), pm.begin(), pm.end());
    }
    return out;
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (m == 0) {
        out.push_back(Partition{});
        return out;
    }
    gen_partitions(m, m, cur, out, true);
    return out;
}

std::vector<Partition> interlacing_partitions(const Partition& lambda) {
    // mu_i ranges over [lambda_{i+1}, lambda_i] independently.
    int k = lambda.num_parts();
    std::vector<Partition> out;
    std::vector<int> mu(k);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.push_back(Partition(mu));
            return;
        }
        int lo = lambda.part(i + 2), hi = lambda.part(i + 1);
        for (int v = hi; v >= lo; --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<ColumnComposition> column_compositions_of(const Partition& lambda) {
    std::vector<int> cols = conjugate(lambda).parts();
    std::sort(cols.begin(), cols.end());
    std::vector<ColumnComposition> out;
    do {
        out.push_back(ColumnComposition(cols));
    } while (std::next_permutation(cols.begin(), cols.end()));
    return out;
}

}  // namespace qw
