#ifndef QW_LATTICE_HPP
#define QW_LATTICE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qw/bijections.hpp"
#include "qw/filling.hpp"
#include "qw/gt.hpp"

namespace qw {

/// Tile of the n x n grid, addressed by its column label (n..1 left to right)
/// and row label (1..n top to bottom).
struct TileKey {
    int col_label = 0;  // i of X_ij
    int row_label = 0;  // j+1 of X_ij
    friend bool operator==(const TileKey&, const TileKey&) = default;
    friend auto operator<=>(const TileKey&, const TileKey&) = default;
};

/// Per-tile strand occupancies. Each list holds originating filling-column
/// indices (1-based, left to right in the filling).
struct TileProfile {
    std::vector<int> type1, type2, type3;
};

class LatticeEnsemble {
public:
    LatticeEnsemble() = default;
    LatticeEnsemble(int n, int num_strands, std::map<TileKey, TileProfile> tiles)
        : n_(n), num_strands_(num_strands), tiles_(std::move(tiles)) {}

    int n() const { return n_; }
    int num_strands() const { return num_strands_; }
    const std::map<TileKey, TileProfile>& tiles() const { return tiles_; }
    const TileProfile& tile(TileKey k) const;

private:
    int n_ = 0;
    int num_strands_ = 0;
    std::map<TileKey, TileProfile> tiles_;
};

/// One strand per filling column; column with entries i_1 < ... < i_k gets a
/// type-II turn in tile (col label t, row i_t), type-I pass-throughs between
/// turns and below the last one, and a type-III exit in (col t, row i_{t+1}).
LatticeEnsemble build_ensemble(const Filling& f);

/// Drop all type-III occupancies.
LatticeEnsemble declutter(const LatticeEnsemble& e);

/// Circle markings of one tile: (x, z) = (type-I strand's filling column,
/// type-II strand's filling column). Solid when x < z (a quinv triple), open
/// when x > z (a refinv triple).
struct CircleMarks {
    std::vector<std::pair<int, int>> solid, open;
};
std::map<TileKey, CircleMarks> mark_circles(const LatticeEnsemble& e);

/// Rebuild (psi_quinv(F), psi_inv(F)) from the tile and circle data alone.
std::pair<POP, POP> extract_overlays(const LatticeEnsemble& decluttered);

enum class RenderFormat { Svg, Text };
std::string render(const Filling& f, RenderFormat format);

}  // namespace qw

#endif
