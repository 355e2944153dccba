#include "qw/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace qw {

POP psi(const Filling& f, bool use_inv) {
    if (!f.is_partition_shape()) throw std::invalid_argument("psi: non-partition shape");
    if (!f.is_column_strict()) throw std::invalid_argument("psi: filling not column strict");
    GTPattern t = gt_from_ssyt(rowsort(f));
    int n = f.n();
    POP::OverlayMap overlay;
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i <= j; ++i) {
            auto cells = cells_with_entry(i, j, f);
            std::vector<int> parts;
            parts.reserve(cells.size());
            if (use_inv) {
                // zcb, left to right
                for (Cell c : cells) parts.push_back(zcb(c, f));
            } else {
                // zcount, right to left
                for (auto it = cells.rbegin(); it != cells.rend(); ++it)
                    parts.push_back(zcount(*it, f));
            }
            overlay.emplace(std::pair{i, j}, std::move(parts));
        }
    }
    return POP(std::move(t), std::move(overlay));
}

POP psi_quinv(const Filling& f) { return psi(f, false); }

POP psi_inv(const Filling& f) { return psi(f, true); }

Filling psi_inverse(const POP& p, bool use_inv) {
    const GTPattern& t = p.gt();
    int n = t.n();
    Partition lambda = t.shape();
    // partial filling, 0 = empty
    std::vector<std::vector<int>> rows(lambda.num_parts());
    for (int i = 1; i <= lambda.num_parts(); ++i) rows[i - 1].assign(lambda.part(i), 0);
    if (lambda.num_parts() == n)
        for (int& e : rows[n - 1]) e = n;
    for (int i = std::min(lambda.num_parts(), n - 1); i >= 1; --i) {
        for (int j = n - 1; j >= i; --j) {
            // candidates: empty cells of row i whose below-entry exceeds j+1
            std::vector<int> cand;  // column indices, left to right
            for (int col = 1; col <= lambda.part(i); ++col) {
                if (rows[i - 1][col - 1] != 0) continue;
                if (col <= lambda.part(i + 1) && rows[i][col - 1] <= j + 1) continue;
                cand.push_back(col);
            }
            int k = ne(t, i, j), l = se(t, i, j);
            if (static_cast<int>(cand.size()) != k + l)
                throw std::invalid_argument("psi_inverse: inconsistent pattern");
            std::vector<int> parts = p.overlay_at(i, j);
            auto a = strict_tuple_from_partition(Partition(parts), k, l);
            for (int pp = 0; pp < k; ++pp) {
                // label a[pp]: counted from the right for inv, left for quinv
                int idx = use_inv ? (k + l - 1 - a[pp]) : a[pp];
                rows[i - 1][cand[idx] - 1] = j + 1;
            }
        }
        for (int& e : rows[i - 1])
            if (e == 0) e = i;
    }
    return Filling::from_rows(n, rows);
}

Filling psi_quinv_inverse(const POP& p) { return psi_inverse(p, false); }

Filling psi_inv_inverse(const POP& p) { return psi_inverse(p, true); }

Filling omega(const Filling& f) { return psi_inv_inverse(bcomp(psi_inv(f))); }

}  // namespace qw
