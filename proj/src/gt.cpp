#include "qw/gt.hpp"

#include <algorithm>
#include <stdexcept>

namespace qw {

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j].size() != j + 1)
            throw std::invalid_argument("GTPattern: row " + std::to_string(j + 1) +
                                        " must have " + std::to_string(j + 1) + " entries");
        if (!std::is_sorted(rows_[j].rbegin(), rows_[j].rend()))
            throw std::invalid_argument("GTPattern: row not weakly decreasing");
        if (rows_[j].back() < 0) throw std::invalid_argument("GTPattern: negative entry");
    }
    // interlacing: T^{j+1}_i >= T^j_i >= T^{j+1}_{i+1}
    for (std::size_t j = 0; j + 1 < rows_.size(); ++j)
        for (std::size_t i = 0; i <= j; ++i)
            if (!(rows_[j + 1][i] >= rows_[j][i] && rows_[j][i] >= rows_[j + 1][i + 1]))
                throw std::invalid_argument("GTPattern: rows do not interlace");
}

int GTPattern::entry(int j, int i) const {
    if (j < 1 || j > n() || i < 1 || i > j + 1)
        throw std::out_of_range("GTPattern::entry");
    if (i == j + 1) return 0;
    return rows_[j - 1][i - 1];
}

int ne(const GTPattern& t, int i, int j) {
    if (i < 1 || j < i || j + 1 > t.n()) throw std::out_of_range("ne: bad (i,j)");
    return t.entry(j + 1, i) - t.entry(j, i);
}

int se(const GTPattern& t, int i, int j) {
    if (i < 1 || j < i || j + 1 > t.n()) throw std::out_of_range("se: bad (i,j)");
    return t.entry(j, i) - t.entry(j + 1, i + 1);
}

GTPattern gt_from_ssyt(const Filling& s) {
    if (!is_ssyt(s)) throw std::invalid_argument("gt_from_ssyt: not an SSYT");
    int n = s.n();
    std::vector<std::vector<int>> rows(n);
    auto frows = s.rows();
    for (int j = 1; j <= n; ++j) {
        rows[j - 1].assign(j, 0);
        for (int i = 1; i <= j; ++i) {
            int cnt = 0;
            if (i - 1 < static_cast<int>(frows.size()))
                for (int e : frows[i - 1])
                    if (e <= j) ++cnt;
            rows[j - 1][i - 1] = cnt;
        }
    }
    return GTPattern(std::move(rows));
}

Filling ssyt_from_gt(const GTPattern& t) {
    int n = t.n();
    std::vector<std::vector<int>> frows;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row;
        // entries j in row i with multiplicity T^j_i - T^{j-1}_i
        for (int j = i; j <= n; ++j) {
            int prev = (j - 1 >= i) ? t.entry(j - 1, i) : 0;
            for (int r = 0; r < t.entry(j, i) - prev; ++r) row.push_back(j);
        }
        if (!row.empty()) frows.push_back(std::move(row));
    }
    return Filling::from_rows(n, frows);
}

QXPoly wt_q(const GTPattern& t) {
    QXPoly out = QXPoly::one(0);
    for (int j = 1; j < t.n(); ++j)
        for (int i = 1; i <= j; ++i) out *= qbinom(ne(t, i, j), se(t, i, j));
    return out;
}

long area(const GTPattern& t) {
    long s = 0;
    for (int j = 1; j < t.n(); ++j)
        for (int i = 1; i <= j; ++i) s += static_cast<long>(ne(t, i, j)) * se(t, i, j);
    return s;
}

QXPoly x_weight(const GTPattern& t, int nvars) {
    if (nvars < t.n()) throw std::invalid_argument("x_weight: too few variables");
    Monomial m{0, 0, std::vector<int>(nvars, 0)};
    for (int j = 1; j <= t.n(); ++j) {
        int rowsum = 0, prevsum = 0;
        for (int i = 1; i <= j; ++i) rowsum += t.entry(j, i);
        for (int i = 1; i <= j - 1; ++i) prevsum += t.entry(j - 1, i);
        m.x[j - 1] = rowsum - prevsum;
    }
    return QXPoly::monomial(nvars, std::move(m));
}

void for_each_gt(const Partition& lambda, int n, const std::function<void(const GTPattern&)>& fn) {
    if (lambda.num_parts() > n) return;
    if (n == 0) {
        fn(GTPattern{});
        return;
    }
    std::vector<std::vector<int>> rows(n);
    for (int i = 1; i <= n; ++i) rows[n - 1].push_back(lambda.part(i));
    // fill rows n-1 down to 1; entry (j,i) in [T^{j+1}_{i+1}, min(T^{j+1}_i, T^j_{i-1})]
    auto rec = [&](auto&& self, int j, int i) -> void {
        if (j == 0) {
            fn(GTPattern(rows));
            return;
        }
        if (i > j) {
            self(self, j - 1, 1);
            return;
        }
        int lo = rows[j][i];          // T^{j+1}_{i+1}
        int hi = rows[j][i - 1];      // T^{j+1}_i
        if (i >= 2) hi = std::min(hi, rows[j - 1][i - 2]);
        if (static_cast<int>(rows[j - 1].size()) < i) rows[j - 1].resize(i);
        for (int v = hi; v >= lo; --v) {
            rows[j - 1][i - 1] = v;
            self(self, j, i + 1);
        }
        rows[j - 1].resize(i - 1);
    };
    rec(rec, n - 1, 1);
}

std::vector<GTPattern> enumerate_gt(const Partition& lambda, int n) {
    std::vector<GTPattern> out;
    for_each_gt(lambda, n, [&](const GTPattern& t) { out.push_back(t); });
    return out;
}

POP::POP(GTPattern gt, OverlayMap overlay) : gt_(std::move(gt)), overlay_(std::move(overlay)) {
    for (int j = 1; j < gt_.n(); ++j) {
        for (int i = 1; i <= j; ++i) {
            auto it = overlay_.find({i, j});
            int k = ne(gt_, i, j), l = se(gt_, i, j);
            if (it == overlay_.end()) {
                if (k != 0) throw std::invalid_argument("POP: missing overlay");
                overlay_.emplace(std::pair{i, j}, std::vector<int>{});
                continue;
            }
            const auto& parts = it->second;
            if (static_cast<int>(parts.size()) != k)
                throw std::invalid_argument("POP: overlay must have exactly NE parts");
            for (std::size_t p = 0; p < parts.size(); ++p) {
                if (parts[p] < 0 || parts[p] > l)
                    throw std::invalid_argument("POP: overlay part outside box");
                if (p + 1 < parts.size() && parts[p] < parts[p + 1])
                    throw std::invalid_argument("POP: overlay not weakly decreasing");
            }
        }
    }
    for (const auto& [key, parts] : overlay_) {
        auto [i, j] = key;
        if (i < 1 || j < i || j + 1 > gt_.n()) throw std::invalid_argument("POP: bad overlay key");
    }
}

const std::vector<int>& POP::overlay_at(int i, int j) const {
    auto it = overlay_.find({i, j});
    if (it == overlay_.end()) throw std::out_of_range("POP::overlay_at");
    return it->second;
}

long POP::weight() const {
    long s = 0;
    for (const auto& [key, parts] : overlay_)
        for (int p : parts) s += p;
    return s;
}

POP bcomp(const POP& p) {
    POP::OverlayMap out;
    for (const auto& [key, parts] : p.overlay()) {
        auto [i, j] = key;
        int l = se(p.gt(), i, j);
        std::vector<int> comp(parts.rbegin(), parts.rend());
        for (int& v : comp) v = l - v;
        out.emplace(key, std::move(comp));
    }
    return POP(p.gt(), std::move(out));
}

GTPattern pr(const POP& p) { return p.gt(); }

POP br(const POP& p) {
    int n = p.gt().n();
    if (n <= 1) throw std::invalid_argument("br: pattern has a single row");
    std::vector<std::vector<int>> rows(p.gt().rows().begin(), p.gt().rows().end() - 1);
    POP::OverlayMap overlay;
    for (const auto& [key, parts] : p.overlay())
        if (key.second < n - 1) overlay.emplace(key, parts);
    return POP(GTPattern(std::move(rows)), std::move(overlay));
}

std::vector<POP::OverlayMap> enumerate_overlays(const GTPattern& t) {
    std::vector<POP::OverlayMap> out;
    out.push_back({});
    for (int j = 1; j < t.n(); ++j) {
        for (int i = 1; i <= j; ++i) {
            int k = ne(t, i, j), l = se(t, i, j);
            auto boxes = box_partitions(k, l);
            std::vector<POP::OverlayMap> next;
            next.reserve(out.size() * boxes.size());
            for (const auto& base : out) {
                for (const auto& g : boxes) {
                    auto m = base;
                    std::vector<int> padded(k, 0);
                    for (int p = 0; p < g.num_parts(); ++p) padded[p] = g.parts()[p];
                    m.emplace(std::pair{i, j}, std::move(padded));
                    next.push_back(std::move(m));
                }
            }
            out = std::move(next);
        }
    }
    return out;
}

std::vector<POP> enumerate_pop(const Partition& lambda, int n) {
    std::vector<POP> out;
    for (const GTPattern& t : enumerate_gt(lambda, n))
        for (auto& ov : enumerate_overlays(t)) out.push_back(POP(t, ov));
    return out;
}

}  // namespace qw
