#ifndef QW_SPLICE_HPP
#define QW_SPLICE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qw/filling.hpp"
#include "qw/partition.hpp"

namespace qw {

/// Column tuple: strictly increasing positive entries, possibly empty. The
/// virtual entry at index 0 is 0.
using ColumnTuple = std::vector<int>;

/// m = max{1 <= i <= len(sigma)+1 : sigma_{i-1} < tau_i}; requires
/// len(sigma) < len(tau).
int splice_index(const ColumnTuple& sigma, const ColumnTuple& tau);

struct SpliceResult {
    ColumnTuple first, second;
    /// Splice index in the short-left orientation; 0 for the equal-length
    /// identity case.
    int m = 0;
    /// True when the input had the longer tuple on the left (reversed case).
    bool reversed = false;
};

/// Swap the suffixes of sigma and tau from index m on; lengths exchange when
/// unequal, equal lengths are a no-op. Involution.
SpliceResult elementary_splice(const ColumnTuple& sigma, const ColumnTuple& tau);

/// Cell correspondence through the splice of columns (a, b) of a shape:
/// where does entry position p of column a (resp. b) land. Positions are
/// 1-based top-down.
struct SpliceCellMap {
    /// new (column, position) of old (column 1, position p) and (column 2, p).
    std::vector<std::pair<int, int>> from_first, from_second;
};
SpliceCellMap splice_cell_map(const ColumnTuple& sigma, const ColumnTuple& tau);

/// Replace columns i, i+1 of F by their elementary splice. Involution; keeps
/// row multisets.
Filling s_i(int i, const Filling& f);

/// Branching map: delete all entries equal to n, then splice at the smallest
/// legal index until the shape is a partition; entries end up in [n-1].
Filling dsplice(const Filling& f);

struct DspliceStep {
    int index;                       // spliced at columns (index, index+1)
    std::vector<int> shape_after;    // column lengths after the step
};
Filling dsplice_traced(const Filling& f, std::vector<DspliceStep>& trace);

/// True iff every maximal sequence of legal splice choices yields the same
/// partition-shaped result. max_states caps the search.
bool dsplice_confluent(const Filling& f, std::size_t max_states = 1u << 20);

}  // namespace qw

#endif
