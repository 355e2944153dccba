#include "qw/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qw {

const TileProfile& LatticeEnsemble::tile(TileKey k) const {
    static const TileProfile empty{};
    auto it = tiles_.find(k);
    return it == tiles_.end() ? empty : it->second;
}

LatticeEnsemble build_ensemble(const Filling& f) {
    if (!f.is_partition_shape()) throw std::invalid_argument("build_ensemble: non-partition shape");
    if (!f.is_column_strict()) throw std::invalid_argument("build_ensemble: not column strict");
    int n = f.n();
    std::map<TileKey, TileProfile> tiles;
    for (int c = 1; c <= f.num_columns(); ++c) {
        const auto& col = f.column(c);
        int k = static_cast<int>(col.size());
        for (int t = 1; t <= k; ++t) {
            tiles[TileKey{t, col[t - 1]}].type2.push_back(c);
            int stop = (t < k) ? col[t] : n + 1;  // next turn row, or the bottom edge
            for (int r = col[t - 1] + 1; r < stop; ++r) tiles[TileKey{t, r}].type1.push_back(c);
            if (t < k) tiles[TileKey{t, col[t]}].type3.push_back(c);
        }
    }
    for (auto& [key, prof] : tiles) {
        std::sort(prof.type1.begin(), prof.type1.end());
        std::sort(prof.type2.begin(), prof.type2.end());
        std::sort(prof.type3.begin(), prof.type3.end());
    }
    return LatticeEnsemble(n, f.num_columns(), std::move(tiles));
}

LatticeEnsemble declutter(const LatticeEnsemble& e) {
    std::map<TileKey, TileProfile> tiles;
    for (const auto& [key, prof] : e.tiles()) {
        if (prof.type1.empty() && prof.type2.empty()) continue;
        tiles.emplace(key, TileProfile{prof.type1, prof.type2, {}});
    }
    return LatticeEnsemble(e.n(), e.num_strands(), std::move(tiles));
}

std::map<TileKey, CircleMarks> mark_circles(const LatticeEnsemble& e) {
    std::map<TileKey, CircleMarks> out;
    for (const auto& [key, prof] : e.tiles()) {
        if (prof.type1.empty() || prof.type2.empty()) continue;
        CircleMarks& marks = out[key];
        for (int x : prof.type1)
            for (int z : prof.type2)
                (x < z ? marks.solid : marks.open).emplace_back(x, z);
    }
    return out;
}

std::pair<POP, POP> extract_overlays(const LatticeEnsemble& e) {
    int n = e.n();
    auto circles = mark_circles(e);
    // T^j_i = number of type-II occupancies in tiles (col i, rows <= j)
    std::vector<std::vector<int>> rows(n);
    for (int j = 1; j <= n; ++j) {
        rows[j - 1].assign(j, 0);
        for (int i = 1; i <= j; ++i) {
            int cnt = 0;
            for (int r = 1; r <= j; ++r) cnt += static_cast<int>(e.tile(TileKey{i, r}).type2.size());
            rows[j - 1][i - 1] = cnt;
        }
    }
    GTPattern t(std::move(rows));
    POP::OverlayMap quinv_ov, inv_ov;
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i <= j; ++i) {
            const TileProfile& prof = e.tile(TileKey{i, j + 1});
            auto it = circles.find(TileKey{i, j + 1});
            std::vector<int> solid_parts, open_parts;
            auto count_for = [&](int z, bool solid) {
                if (it == circles.end()) return 0;
                const auto& list = solid ? it->second.solid : it->second.open;
                return static_cast<int>(
                    std::count_if(list.begin(), list.end(), [&](auto pr) { return pr.second == z; }));
            };
            // quinv overlay reads type-II strands right to left (descending z),
            // inv overlay left to right
            for (auto zit = prof.type2.rbegin(); zit != prof.type2.rend(); ++zit)
                solid_parts.push_back(count_for(*zit, true));
            for (int z : prof.type2) open_parts.push_back(count_for(z, false));
            quinv_ov.emplace(std::pair{i, j}, std::move(solid_parts));
            inv_ov.emplace(std::pair{i, j}, std::move(open_parts));
        }
    }
    return {POP(t, std::move(quinv_ov)), POP(t, std::move(inv_ov))};
}

namespace {

struct TextCanvas {
    int w, h;
    std::vector<std::vector<std::string>> cells;  // UTF-8 glyph per cell
    TextCanvas(int w, int h) : w(w), h(h), cells(h, std::vector<std::string>(w, " ")) {}
    void put(int y, int x, const std::string& s) {
        if (y >= 0 && y < h && x >= 0 && x < w) cells[y][x] = s;
    }
    const std::string& at(int y, int x) const { return cells[y][x]; }
    std::string str() const {
        std::string out;
        for (const auto& row : cells) {
            std::string line;
            for (const auto& c : row) line += c;
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line;
            out += "\n";
        }
        return out;
    }
};

// joins an existing glyph with a new segment direction
std::string merge_glyph(const std::string& old, const std::string& nw) {
    if (old == " " || old == nw) return nw;
    // any overlap of distinct path glyphs renders as a crossing
    return "┼";  // box drawings light vertical and horizontal
}

std::string render_text(const Filling& f) {
    LatticeEnsemble full = build_ensemble(f);
    auto circles = mark_circles(declutter(full));
    int n = full.n();
    int d = std::max(full.num_strands(), 1);
    int S = d + 1;                    // inner tile size
    int tile_span = S + 1;            // plus one border column/row
    TextCanvas canvas(n * tile_span + 1, n * tile_span + 1);
    // grid frame
    for (int gy = 0; gy <= n; ++gy)
        for (int x = 0; x <= n * tile_span; ++x)
            canvas.put(gy * tile_span, x, (x % tile_span == 0) ? "+" : "-");
    for (int gx = 0; gx <= n; ++gx)
        for (int y = 0; y <= n * tile_span; ++y)
            if (y % tile_span != 0) canvas.put(y, gx * tile_span, "|");
    // tile origin (top-left inner cell) for (col label i, row label r)
    auto origin = [&](int col_label, int row_label) {
        int gx = n - col_label;  // grid column 0-based, labels n..1 left to right
        int gy = row_label - 1;
        return std::pair<int, int>{gy * tile_span + 1, gx * tile_span + 1};
    };
    auto draw = [&](int y, int x, const std::string& g) {
        canvas.put(y, x, merge_glyph(canvas.at(y, x), g));
    };
    const std::string kV = "│", kH = "─", kTurnDown = "┐", kTurnLeft = "┘";
    int xv = 0, yh = 0;
    auto x_vert = [&](int c) { return d - c + 1; };   // 0-based inner column
    auto y_horiz = [&](int c) { return d - c; };      // 0-based inner row
    for (const auto& [key, prof] : full.tiles()) {
        auto [oy, ox] = origin(key.col_label, key.row_label);
        for (int c : prof.type1) {
            xv = x_vert(c);
            for (int y = 0; y < S; ++y) draw(oy + y, ox + xv, kV);
        }
        for (int c : prof.type2) {
            xv = x_vert(c);
            yh = y_horiz(c);
            for (int x = S - 1; x > xv; --x) draw(oy + yh, ox + x, kH);
            draw(oy + yh, ox + S, kH);  // border crossing into the next tile
            draw(oy + yh, ox + xv, kTurnDown);
            for (int y = yh + 1; y < S; ++y) draw(oy + y, ox + xv, kV);
        }
        for (int c : prof.type3) {
            xv = x_vert(c);
            yh = y_horiz(c);
            for (int y = 0; y < yh; ++y) draw(oy + y, ox + xv, kV);
            draw(oy + yh, ox + xv, kTurnLeft);
            for (int x = 0; x < xv; ++x) draw(oy + yh, ox + x, kH);
            draw(oy + yh, ox - 1, kH);  // border crossing out of the tile
        }
    }
    // circles overwrite path glyphs at the (would-be) crossing loci
    for (const auto& [key, marks] : circles) {
        auto [oy, ox] = origin(key.col_label, key.row_label);
        for (auto [x, z] : marks.solid) canvas.put(oy + y_horiz(z), ox + x_vert(x), "●");
        for (auto [x, z] : marks.open) canvas.put(oy + y_horiz(z), ox + x_vert(x), "○");
    }
    // outer labels: column labels n..1 above, row labels 1..n on the left
    std::ostringstream os;
    os << "  ";
    for (int g = 0; g < n; ++g) {
        std::string lbl = std::to_string(n - g);
        os << std::string(tile_span / 2, ' ') << lbl
           << std::string(tile_span - tile_span / 2 - static_cast<int>(lbl.size()), ' ');
    }
    os << "\n";
    std::string body = canvas.str();
    int row_label = 1;
    std::size_t pos = 0, line_no = 0;
    while (pos < body.size()) {
        std::size_t e = body.find('\n', pos);
        std::string line = body.substr(pos, e - pos);
        bool label_row = (line_no % tile_span == static_cast<std::size_t>(tile_span / 2 + 1)) &&
                         line_no < static_cast<std::size_t>(n) * tile_span;
        if (label_row && row_label <= n)
            os << row_label++ << " ";
        else
            os << "  ";
        os << line << "\n";
        pos = e + 1;
        ++line_no;
    }
    return os.str();
}

std::string render_svg(const Filling& f) {
    LatticeEnsemble full = build_ensemble(f);
    auto circles = mark_circles(declutter(full));
    int n = full.n();
    int d = std::max(full.num_strands(), 1);
    const int T = 60;  // tile size in px
    const int M = 30;  // margin
    std::ostringstream os;
    int W = n * T + 2 * M, H = n * T + 2 * M;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    for (int g = 0; g <= n; ++g) {
        os << "<line x1=\"" << M << "\" y1=\"" << M + g * T << "\" x2=\"" << M + n * T << "\" y2=\""
           << M + g * T << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        os << "<line x1=\"" << M + g * T << "\" y1=\"" << M << "\" x2=\"" << M + g * T << "\" y2=\""
           << M + n * T << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    }
    for (int g = 0; g < n; ++g) {
        os << "<text x=\"" << M + g * T + T / 2 << "\" y=\"" << M - 8
           << "\" text-anchor=\"middle\" font-size=\"14\">" << n - g << "</text>\n";
        os << "<text x=\"" << M - 12 << "\" y=\"" << M + g * T + T / 2 + 5
           << "\" text-anchor=\"middle\" font-size=\"14\">" << g + 1 << "</text>\n";
    }
    static const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    auto colour = [&](int c) { return kColours[(c - 1) % 8]; };
    auto tile_x = [&](int col_label) { return M + (n - col_label) * T; };
    auto tile_y = [&](int row_label) { return M + (row_label - 1) * T; };
    auto xv = [&](int c) { return static_cast<int>(T * (d - c + 1.0) / (d + 1.0)); };
    auto yh = [&](int c) { return T - static_cast<int>(T * (c * 1.0) / (d + 1.0)); };
    auto line = [&](int x1, int y1, int x2, int y2, int c) {
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\" stroke=\"" << colour(c) << "\" stroke-width=\"2\"/>\n";
    };
    for (const auto& [key, prof] : full.tiles()) {
        int ox = tile_x(key.col_label), oy = tile_y(key.row_label);
        for (int c : prof.type1) line(ox + xv(c), oy, ox + xv(c), oy + T, c);
        for (int c : prof.type2) {
            line(ox + xv(c), oy + yh(c), ox + T, oy + yh(c), c);
            line(ox + xv(c), oy + yh(c), ox + xv(c), oy + T, c);
        }
        for (int c : prof.type3) {
            line(ox + xv(c), oy, ox + xv(c), oy + yh(c), c);
            line(ox, oy + yh(c), ox + xv(c), oy + yh(c), c);
        }
    }
    for (const auto& [key, marks] : circles) {
        int ox = tile_x(key.col_label), oy = tile_y(key.row_label);
        for (auto [x, z] : marks.solid)
            os << "<circle cx=\"" << ox + xv(x) << "\" cy=\"" << oy + yh(z)
               << "\" r=\"4\" fill=\"black\"/>\n";
        for (auto [x, z] : marks.open)
            os << "<circle cx=\"" << ox + xv(x) << "\" cy=\"" << oy + yh(z)
               << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render(const Filling& f, RenderFormat format) {
    switch (format) {
        case RenderFormat::Text:
            return render_text(f);
        case RenderFormat::Svg:
            return render_svg(f);
    }
    throw std::invalid_argument("render: unsupported format");
}

}  // namespace qw
