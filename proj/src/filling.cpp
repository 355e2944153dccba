#include "qw/filling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qw {

Filling::Filling(int n, std::vector<std::vector<int>> columns) : n_(n), cols_(std::move(columns)) {
    if (n < 0) throw std::invalid_argument("Filling: negative n");
    for (const auto& col : cols_)
        for (int e : col)
            if (e < 1 || e > n_) throw std::invalid_argument("Filling: entry out of [1,n]");
}

Filling Filling::from_rows(int n, const std::vector<std::vector<int>>& rows) {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].size() < rows[i + 1].size())
            throw std::invalid_argument("Filling::from_rows: row lengths not a partition");
    std::size_t width = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<int>> cols(width);
    for (std::size_t j = 0; j < width; ++j)
        for (const auto& row : rows)
            if (j < row.size()) cols[j].push_back(row[j]);
    return Filling(n, std::move(cols));
}

const std::vector<int>& Filling::column(int j) const {
    if (j < 1 || j > num_columns()) throw std::out_of_range("Filling::column");
    return cols_[j - 1];
}

ColumnComposition Filling::shape() const {
    std::vector<int> lens;
    lens.reserve(cols_.size());
    for (const auto& col : cols_) lens.push_back(static_cast<int>(col.size()));
    return ColumnComposition(std::move(lens));
}

bool Filling::is_partition_shape() const { return shape().is_partition_shape(); }

Partition Filling::partition_shape() const {
    if (!is_partition_shape()) throw std::invalid_argument("Filling: not a partition shape");
    std::vector<int> rows(num_rows());
    for (const auto& col : cols_)
        for (std::size_t i = 0; i < col.size(); ++i) ++rows[i];
    return Partition(std::move(rows));
}

bool Filling::has_cell(Cell c) const {
    return c.col >= 1 && c.col <= num_columns() && c.row >= 1 &&
           c.row <= static_cast<int>(cols_[c.col - 1].size());
}

int Filling::entry(Cell c) const {
    if (!has_cell(c)) throw std::out_of_range("Filling::entry: cell outside shape");
    return cols_[c.col - 1][c.row - 1];
}

int Filling::num_rows() const {
    int m = 0;
    for (const auto& col : cols_) m = std::max(m, static_cast<int>(col.size()));
    return m;
}

int Filling::num_cells() const {
    int s = 0;
    for (const auto& col : cols_) s += static_cast<int>(col.size());
    return s;
}

int Filling::row_length(int i) const {
    int s = 0;
    for (const auto& col : cols_)
        if (static_cast<int>(col.size()) >= i) ++s;
    return s;
}

std::vector<Cell> Filling::row_cells(int i) const {
    std::vector<Cell> out;
    for (int j = 1; j <= num_columns(); ++j)
        if (static_cast<int>(cols_[j - 1].size()) >= i) out.push_back(Cell{i, j});
    return out;
}

std::vector<std::vector<int>> Filling::rows() const {
    std::vector<std::vector<int>> out(num_rows());
    for (int i = 1; i <= num_rows(); ++i)
        for (Cell c : row_cells(i)) out[i - 1].push_back(entry(c));
    return out;
}

bool Filling::is_column_strict() const {
    for (const auto& col : cols_)
        for (std::size_t i = 0; i + 1 < col.size(); ++i)
            if (col[i] >= col[i + 1]) return false;
    return true;
}

namespace {

// Row-major cell list of a partition shape.
std::vector<Cell> row_major_cells(const Partition& lambda) {
    std::vector<Cell> cells;
    for (int i = 1; i <= lambda.num_parts(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cells.push_back(Cell{i, j});
    return cells;
}

void enumerate_impl(const Partition& lambda, int n, bool column_strict,
                    const std::function<void(const Filling&)>& fn) {
    Partition conj = conjugate(lambda);
    std::vector<std::vector<int>> cols(conj.num_parts());
    for (int j = 1; j <= conj.num_parts(); ++j) cols[j - 1].assign(conj.part(j), 0);
    auto cells = row_major_cells(lambda);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            fn(Filling(n, cols));
            return;
        }
        Cell c = cells[idx];
        int lo = 1;
        if (column_strict && c.row > 1) lo = cols[c.col - 1][c.row - 2] + 1;
        for (int v = lo; v <= n; ++v) {
            cols[c.col - 1][c.row - 1] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

void for_each_csf(const Partition& lambda, int n, const std::function<void(const Filling&)>& fn) {
    enumerate_impl(lambda, n, true, fn);
}

std::vector<Filling> enumerate_csf(const Partition& lambda, int n) {
    std::vector<Filling> out;
    for_each_csf(lambda, n, [&](const Filling& f) { out.push_back(f); });
    return out;
}

std::vector<Filling> enumerate_csf(const ColumnComposition& gamma, int n) {
    // Per-column strictly increasing tuples, odometer over columns in order.
    std::vector<std::vector<std::vector<int>>> choices(gamma.num_columns());
    for (int j = 1; j <= gamma.num_columns(); ++j) {
        int k = gamma.column_length(j);
        std::vector<int> tuple(k);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == k) {
                choices[j - 1].push_back(tuple);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                tuple[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
        if (choices[j - 1].empty()) return {};
    }
    std::vector<Filling> out;
    std::vector<std::size_t> idx(gamma.num_columns(), 0);
    for (;;) {
        std::vector<std::vector<int>> cols;
        cols.reserve(gamma.num_columns());
        for (int j = 0; j < gamma.num_columns(); ++j) cols.push_back(choices[j][idx[j]]);
        out.push_back(Filling(n, std::move(cols)));
        int j = gamma.num_columns() - 1;
        while (j >= 0 && ++idx[j] == choices[j].size()) idx[j--] = 0;
        if (j < 0) break;
    }
    return out;
}

void for_each_filling(const Partition& lambda, int n, const std::function<void(const Filling&)>& fn) {
    enumerate_impl(lambda, n, false, fn);
}

std::vector<Filling> enumerate_fillings(const Partition& lambda, int n) {
    std::vector<Filling> out;
    for_each_filling(lambda, n, [&](const Filling& f) { out.push_back(f); });
    return out;
}

QXPoly x_weight(const Filling& f) {
    Monomial m{0, 0, std::vector<int>(f.n(), 0)};
    for (const auto& col : f.columns())
        for (int e : col) ++m.x[e - 1];
    return QXPoly::monomial(f.n(), std::move(m));
}

std::vector<Cell> descents(const Filling& f) {
    if (!f.is_partition_shape()) throw std::invalid_argument("descents: non-partition shape");
    std::vector<Cell> out;
    for (int j = 1; j <= f.num_columns(); ++j) {
        const auto& col = f.column(j);
        for (std::size_t i = 1; i < col.size(); ++i)
            if (col[i] > col[i - 1]) out.push_back(Cell{static_cast<int>(i) + 1, j});
    }
    return out;
}

long maj(const Filling& f) {
    Partition lambda = f.partition_shape();
    long s = 0;
    for (Cell u : descents(f)) s += leg(u, lambda) + 1;
    return s;
}

namespace {

// F(u) > F(v) over all attack pairs; att(u over v) selects the geometry.
long attack_statistic(const Filling& f, bool quinv_attack) {
    if (!f.is_partition_shape()) throw std::invalid_argument("statistic: non-partition shape");
    Partition lambda = f.partition_shape();
    long pairs = 0;
    for (int i = 1; i <= lambda.num_parts(); ++i) {
        int len = lambda.part(i);
        for (int ju = 1; ju <= len; ++ju) {
            int fu = f.entry(Cell{i, ju});
            // same-row partner v: u left of v (inv) or u right of v (quinv)
            for (int jv = 1; jv <= len; ++jv) {
                if (quinv_attack ? jv < ju : jv > ju) {
                    if (fu > f.entry(Cell{i, jv})) ++pairs;
                }
            }
            // v in the row above u, with column right of u (quinv) or left (inv)
            if (i > 1) {
                int above = lambda.part(i - 1);
                for (int jv = 1; jv <= above; ++jv) {
                    if (quinv_attack ? jv > ju : jv < ju) {
                        if (fu > f.entry(Cell{i - 1, jv})) ++pairs;
                    }
                }
            }
        }
    }
    long corr = 0;
    for (Cell u : descents(f))
        corr += arm(quinv_attack ? Cell{u.row - 1, u.col} : u, lambda);
    return pairs - corr;
}

}  // namespace

long inv(const Filling& f) { return attack_statistic(f, false); }

long quinv(const Filling& f) { return attack_statistic(f, true); }

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

// Entry of the augmented diagram: one extra cell below each column reads as
// +infinity.
int aug_entry(const Filling& f, Cell c) {
    if (f.has_cell(c)) return f.entry(c);
    if (c.col >= 1 && c.col <= f.num_columns() &&
        c.row == static_cast<int>(f.column(c.col).size()) + 1)
        return kInfinity;
    throw std::out_of_range("aug_entry: cell outside augmented diagram");
}

std::vector<Triple> triples_impl(const Filling& f, bool z_right) {
    if (!f.is_column_strict()) throw std::invalid_argument("triples: filling not column strict");
    std::vector<Triple> out;
    for (int jx = 1; jx <= f.num_columns(); ++jx) {
        int lenx = static_cast<int>(f.column(jx).size());
        for (int i = 1; i <= lenx; ++i) {
            Cell x{i, jx}, y{i + 1, jx};
            int fx = f.entry(x), fy = aug_entry(f, y);
            for (int jz = 1; jz <= f.num_columns(); ++jz) {
                if (z_right ? jz <= jx : jz >= jx) continue;
                Cell z{i, jz};
                if (!f.has_cell(z)) continue;
                int fz = f.entry(z);
                if (fx < fz && fz < fy) out.push_back(Triple{x, y, z});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Triple> quinv_triples(const Filling& f) { return triples_impl(f, true); }

std::vector<Triple> refinv_triples(const Filling& f) { return triples_impl(f, false); }

long refinv(const Filling& f) { return static_cast<long>(refinv_triples(f).size()); }

int zcount(Cell c, const Filling& f) {
    if (!f.has_cell(c)) throw std::out_of_range("zcount: cell outside shape");
    int cnt = 0;
    for (const Triple& t : quinv_triples(f))
        if (t.z == c) ++cnt;
    return cnt;
}

int zcb(Cell c, const Filling& f) {
    if (!f.has_cell(c)) throw std::out_of_range("zcb: cell outside shape");
    int cnt = 0;
    for (const Triple& t : refinv_triples(f))
        if (t.z == c) ++cnt;
    return cnt;
}

std::vector<Cell> cells_with_entry(int i, int j, const Filling& f) {
    if (i < 1 || j + 1 < i || j + 1 > f.n()) throw std::out_of_range("cells_with_entry: bad (i,j)");
    std::vector<Cell> out;
    for (Cell c : f.row_cells(i))
        if (f.entry(c) == j + 1) out.push_back(c);
    return out;
}

Filling rowsort(const Filling& f) {
    if (!f.is_partition_shape()) throw std::invalid_argument("rowsort: non-partition shape");
    auto rows = f.rows();
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return Filling::from_rows(f.n(), rows);
}

bool is_ssyt(const Filling& f) {
    if (!f.is_partition_shape() || !f.is_column_strict()) return false;
    for (const auto& row : f.rows())
        if (!std::is_sorted(row.begin(), row.end())) return false;
    return true;
}

}  // namespace qw
