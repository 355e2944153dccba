#ifndef QW_GT_HPP
#define QW_GT_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qw/filling.hpp"
#include "qw/partition.hpp"
#include "qw/qxpoly.hpp"

namespace qw {

/// Gelfand-Tsetlin pattern: rows T^1, ..., T^n with row j holding j entries,
/// consecutive rows interlacing. Row n is the top row (the shape).
class GTPattern {
public:
    GTPattern() = default;
    /// rows[j-1] = T^j (shortest row first); validated for interlacing.
    explicit GTPattern(std::vector<std::vector<int>> rows);

    int n() const { return static_cast<int>(rows_.size()); }
    /// T^j_i, 1-based; i == j+1 reads as 0.
    int entry(int j, int i) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const { return Partition(rows_.empty() ? std::vector<int>{} : rows_.back()); }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// NE_ij = T^{j+1}_i - T^j_i and SE_ij = T^j_i - T^{j+1}_{i+1}, 1 <= i <= j < n.
int ne(const GTPattern& t, int i, int j);
int se(const GTPattern& t, int i, int j);

GTPattern gt_from_ssyt(const Filling& s);
Filling ssyt_from_gt(const GTPattern& t);

/// Product over 1 <= i <= j < n of qbinom(NE_ij, SE_ij), in q alone.
QXPoly wt_q(const GTPattern& t);

/// Sum of NE_ij * SE_ij; the largest overlay weight.
long area(const GTPattern& t);

QXPoly x_weight(const GTPattern& t, int nvars);

std::vector<GTPattern> enumerate_gt(const Partition& lambda, int n);
void for_each_gt(const Partition& lambda, int n, const std::function<void(const GTPattern&)>& fn);

/// Partition overlaid pattern: for each 1 <= i <= j < n an overlay partition
/// fitting the NE_ij x SE_ij box, stored zero-padded to exactly NE_ij parts.
/// Pairs with NE_ij = 0 are kept as empty vectors.
class POP {
public:
    using OverlayMap = std::map<std::pair<int, int>, std::vector<int>>;

    POP() = default;
    POP(GTPattern gt, OverlayMap overlay);

    const GTPattern& gt() const { return gt_; }
    const OverlayMap& overlay() const { return overlay_; }
    /// Overlay at (i,j), zero-padded to NE_ij parts.
    const std::vector<int>& overlay_at(int i, int j) const;

    /// |Lambda|, total overlay weight.
    long weight() const;

    friend bool operator==(const POP&, const POP&) = default;
    friend auto operator<=>(const POP&, const POP&) = default;

private:
    GTPattern gt_;
    OverlayMap overlay_;
};

/// Complement every overlay inside its NE x SE box; involution with
/// weight(P) + weight(bcomp(P)) = area(gt).
POP bcomp(const POP& p);

GTPattern pr(const POP& p);
/// Delete the top GT row and the overlays with j = n-1.
POP br(const POP& p);

std::vector<POP> enumerate_pop(const Partition& lambda, int n);
std::vector<POP::OverlayMap> enumerate_overlays(const GTPattern& t);

}  // namespace qw

#endif
