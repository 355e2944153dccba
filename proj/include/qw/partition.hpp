#ifndef QW_PARTITION_HPP
#define QW_PARTITION_HPP

#include <compare>
#include <stdexcept>
#include <vector>

namespace qw {

/// Integer partition: weakly decreasing non-negative parts, trailing zeros
/// stripped. The ambient variable count n is never stored; callers supply it.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts not weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }

    /// 1-based part access; parts beyond the end read as 0.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("Partition::part: index < 1");
        return i <= num_parts() ? parts_[i - 1] : 0;
    }

    /// |lambda|, the number of cells of the Young diagram.
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Cell of a Young diagram, 1-based: row from the top, column from the left.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Sequence of column lengths, one per column left-to-right. Unlike a
/// partition the lengths need not decrease, and empty columns are kept.
class ColumnComposition {
public:
    ColumnComposition() = default;
    explicit ColumnComposition(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        for (int l : lengths_)
            if (l < 0) throw std::invalid_argument("ColumnComposition: negative length");
    }

    const std::vector<int>& column_lengths() const { return lengths_; }
    int num_columns() const { return static_cast<int>(lengths_.size()); }
    int column_length(int j) const {
        if (j < 1 || j > num_columns()) return 0;
        return lengths_[j - 1];
    }
    int num_cells() const {
        int s = 0;
        for (int l : lengths_) s += l;
        return s;
    }

    bool is_partition_shape() const {
        for (std::size_t i = 0; i + 1 < lengths_.size(); ++i)
            if (lengths_[i] < lengths_[i + 1]) return false;
        return true;
    }

    /// The column lengths sorted descending, as a partition (the conjugate of
    /// the row shape when the lengths already decrease).
    Partition sorted_partition_of_columns() const;

    friend bool operator==(const ColumnComposition&, const ColumnComposition&) = default;

private:
    std::vector<int> lengths_;
};

Partition conjugate(const Partition& lambda);

/// mu interlaces lambda: lambda_i >= mu_i >= lambda_{i+1} for all i.
bool interlaces(const Partition& mu, const Partition& lambda);

/// n(lambda) = sum_j C(lambda'_j, 2), the largest value maj can take.
long n_stat(const Partition& lambda);

bool contains(const Partition& lambda, Cell c);

int arm(Cell c, const Partition& lambda);
int coarm(Cell c, const Partition& lambda);
int leg(Cell c, const Partition& lambda);

/// All partitions with at most max_cells cells (including the empty one),
/// in a fixed deterministic order.
std::vector<Partition> partitions_up_to(int max_cells);

/// All partitions of exactly m cells.
std::vector<Partition> partitions_of(int m);

/// All mu with mu interlacing lambda.
std::vector<Partition> interlacing_partitions(const Partition& lambda);

/// Distinct column orders of dg(lambda), i.e. Comp(lambda).
std::vector<ColumnComposition> column_compositions_of(const Partition& lambda);

}  // namespace qw

#endif
