#ifndef QW_FILLING_HPP
#define QW_FILLING_HPP

#include <functional>
#include <vector>

#include "qw/partition.hpp"
#include "qw/qxpoly.hpp"

namespace qw {

/// A filling of a column-composition diagram with entries in [1, n].
/// Stored column-major: column(j) lists entries top to bottom. Partition
/// shapes are the special case of weakly decreasing column lengths.
class Filling {
public:
    Filling() = default;
    Filling(int n, std::vector<std::vector<int>> columns);

    /// Build from rows top-to-bottom; the row lengths must form a partition.
    static Filling from_rows(int n, const std::vector<std::vector<int>>& rows);

    int n() const { return n_; }
    int num_columns() const { return static_cast<int>(cols_.size()); }
    const std::vector<int>& column(int j) const;  // 1-based
    const std::vector<std::vector<int>>& columns() const { return cols_; }

    ColumnComposition shape() const;
    bool is_partition_shape() const;
    /// Row lengths as a partition; throws on non-partition shape.
    Partition partition_shape() const;

    bool has_cell(Cell c) const;
    int entry(Cell c) const;
    int num_rows() const;
    int num_cells() const;
    int row_length(int i) const;  // number of cells in row i

    /// Cells of row i left-to-right (all shapes).
    std::vector<Cell> row_cells(int i) const;
    std::vector<std::vector<int>> rows() const;

    bool is_column_strict() const;

    friend bool operator==(const Filling&, const Filling&) = default;
    friend auto operator<=>(const Filling& a, const Filling& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.cols_ <=> b.cols_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> cols_;
};

/// All column strict fillings of shape lambda with entries in [n], each once,
/// in row-major lexicographic order of the entry sequence.
void for_each_csf(const Partition& lambda, int n, const std::function<void(const Filling&)>& fn);
std::vector<Filling> enumerate_csf(const Partition& lambda, int n);

/// CSFs of an arbitrary column-composition shape (same order convention).
std::vector<Filling> enumerate_csf(const ColumnComposition& gamma, int n);

/// All n^|lambda| fillings, row-major lexicographic order.
void for_each_filling(const Partition& lambda, int n, const std::function<void(const Filling&)>& fn);
std::vector<Filling> enumerate_fillings(const Partition& lambda, int n);

QXPoly x_weight(const Filling& f);

// Statistics on partition-shaped fillings.
std::vector<Cell> descents(const Filling& f);
long maj(const Filling& f);
long inv(const Filling& f);
long quinv(const Filling& f);

struct Triple {
    Cell x, y, z;
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Triple statistics; defined on column strict fillings of any column
// composition, over the augmented diagram (one extra cell below each column,
// read as +infinity).
std::vector<Triple> quinv_triples(const Filling& f);
std::vector<Triple> refinv_triples(const Filling& f);
long refinv(const Filling& f);

int zcount(Cell c, const Filling& f);
int zcb(Cell c, const Filling& f);

/// Cells of row i containing the entry j+1, left-to-right. 1 <= i <= j+1 <= n.
std::vector<Cell> cells_with_entry(int i, int j, const Filling& f);

/// Sort every row ascending; maps CSF(lambda) onto SSYT(lambda).
Filling rowsort(const Filling& f);

bool is_ssyt(const Filling& f);

}  // namespace qw

#endif
