#include "qw/characters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qw/gt.hpp"

namespace qw {

QXPoly whittaker(const Partition& lambda, int n, WhittakerMethod method) {
    QXPoly out(n);
    switch (method) {
        case WhittakerMethod::Inv:
            for_each_csf(lambda, n, [&](const Filling& f) {
                out += x_weight(f) * QXPoly::q_power(n, static_cast<int>(inv(f)));
            });
            break;
        case WhittakerMethod::Quinv:
            for_each_csf(lambda, n, [&](const Filling& f) {
                out += x_weight(f) * QXPoly::q_power(n, static_cast<int>(quinv(f)));
            });
            break;
        case WhittakerMethod::Fermionic:
            for_each_gt(lambda, n, [&](const GTPattern& t) {
                out += x_weight(t, n) * wt_q(t).extend_vars(n);
            });
            break;
    }
    return out;
}

TPoly modified_macdonald(const Partition& lambda, int n, bool use_inv) {
    TPoly out(n);
    for_each_filling(lambda, n, [&](const Filling& f) {
        long v = use_inv ? inv(f) : quinv(f);
        out += x_weight(f) * QXPoly::q_power(n, static_cast<int>(v)) *
               QXPoly::t_power(n, static_cast<int>(maj(f)));
    });
    return out;
}

QXPoly schur(const Partition& lambda, int n) {
    QXPoly out(n);
    for_each_gt(lambda, n, [&](const GTPattern& t) { out += x_weight(t, n); });
    return out;
}

bool branching_check(const Partition& lambda, int n) {
    if (n < 2) throw std::invalid_argument("branching_check: n must be at least 2");
    QXPoly lhs = whittaker(lambda, n, WhittakerMethod::Inv);
    QXPoly rhs(n);
    for (const Partition& mu : interlacing_partitions(lambda)) {
        QXPoly factor = QXPoly::one(0);
        for (int i = 1; i <= lambda.num_parts(); ++i)
            factor *= qbinom(lambda.part(i) - mu.part(i), mu.part(i) - lambda.part(i + 1));
        QXPoly term = factor.extend_vars(n) * whittaker(mu, n - 1, WhittakerMethod::Inv).extend_vars(n);
        rhs += term.mul_var_pow(n, lambda.size() - mu.size());
    }
    return lhs == rhs;
}

mpq_class norm_sq(const std::vector<int>& gamma, int n) {
    if (static_cast<int>(gamma.size()) != n) throw std::invalid_argument("norm_sq: length mismatch");
    long sq = 0, s = 0;
    for (int g : gamma) {
        sq += static_cast<long>(g) * g;
        s += g;
    }
    mpq_class out(sq);
    out -= mpq_class(s * s, n);
    out.canonicalize();
    return out;
}

long half_norm_sq(const Partition& lambda, int n) {
    if (lambda.size() % n != 0)
        throw std::invalid_argument("half_norm_sq: |lambda| not divisible by n");
    std::vector<int> g(n, 0);
    for (int i = 1; i <= n; ++i) g[i - 1] = lambda.part(i);
    mpq_class v = norm_sq(g, n) / 2;
    if (v.get_den() != 1) throw std::logic_error("half_norm_sq: not an integer");
    return v.get_num().get_si();
}

QXPoly normalize_whittaker(const Partition& lambda, int n) {
    if (lambda.size() % n != 0)
        throw std::invalid_argument("normalize_whittaker: |lambda| not divisible by n");
    long h = half_norm_sq(lambda, n);
    QXPoly w = whittaker(lambda, n, WhittakerMethod::Inv).invert_q();
    return w.shift_x_all(-lambda.size() / n) * QXPoly::q_power(n, static_cast<int>(h));
}

QXPoly theta_truncated(int n, int D) {
    if (n < 1 || D < 0) throw std::invalid_argument("theta_truncated: bad arguments");
    QXPoly out(n);
    // gamma in Z^n, sum 0, sum of squares <= 2D
    std::vector<int> g(n, 0);
    auto rec = [&](auto&& self, int i, int sum, long sq) -> void {
        if (i == n - 1) {
            g[i] = -sum;
            long total = sq + static_cast<long>(sum) * sum;
            if (total <= 2L * D) {
                Monomial m{static_cast<int>(total / 2), 0, g};
                out.add_term(m, 1);
            }
            return;
        }
        int bound = static_cast<int>(std::sqrt(2.0 * D)) + 1;
        for (int v = -bound; v <= bound; ++v) {
            long nsq = sq + static_cast<long>(v) * v;
            if (nsq > 2L * D) continue;
            g[i] = v;
            self(self, i + 1, sum + v, nsq);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

QXPoly chi_lambda0_truncated(int n, int D) {
    QXPoly out = theta_truncated(n, D);
    // multiply by (1 - q^k)^{-(n-1)} for k = 1..D, truncating at degree D
    for (int k = 1; k <= D; ++k) {
        QXPoly geo(n);
        for (int m = 0; m * k <= D; ++m) geo += QXPoly::q_power(n, m * k);
        for (int r = 0; r < n - 1; ++r) out = (out * geo).truncate_q(D);
    }
    return out;
}

Filling s_map(const Filling& f, int n) {
    std::vector<std::vector<int>> cols;
    std::vector<int> left;
    for (int e = 2; e <= n; ++e) left.push_back(e);
    cols.push_back(std::move(left));
    for (const auto& col : f.columns()) cols.push_back(col);
    cols.push_back(std::vector<int>{1});
    return Filling(n, std::move(cols));
}

Partition add_k_theta(const Partition& lambda, int k, int n) {
    if (n < 2) throw std::invalid_argument("add_k_theta: n must be at least 2");
    std::vector<int> parts(std::max(lambda.num_parts(), n - 1), 0);
    for (int i = 1; i <= static_cast<int>(parts.size()); ++i) parts[i - 1] = lambda.part(i);
    parts[0] += 2 * k;
    for (int i = 2; i <= n - 1; ++i) parts[i - 1] += k;
    return Partition(std::move(parts));
}

bool in_C_k(const Filling& f, int k, const Partition& lambda, int n) {
    int last = lambda.part(1) + 2 * k;
    if (f.num_columns() == 0) return true;
    if (!f.column(1).empty() && f.column(1).front() == 1) return true;
    if (last > f.num_columns()) return true;
    const auto& lc = f.column(last);
    return std::find(lc.begin(), lc.end(), 1) == lc.end();
}

QXPoly chi_via_csf(const Partition& lambda, int n, int K, int D) {
    if (lambda.size() % n != 0)
        throw std::invalid_argument("chi_via_csf: |lambda| not divisible by n");
    QXPoly out(n);
    for (int k = 0; k <= K; ++k) {
        Partition shape = add_k_theta(lambda, k, n);
        long base = half_norm_sq(shape, n);
        int degshift = static_cast<int>(shape.size()) / n;
        for_each_csf(shape, n, [&](const Filling& f) {
            if (!in_C_k(f, k, lambda, n)) return;
            long e = base - inv(f);
            if (e > D) return;
            out += x_weight(f).shift_x_all(-degshift) * QXPoly::q_power(n, static_cast<int>(e));
        });
    }
    return out;
}

int stabilized_K(const Partition& lambda, int n, int D, int cap) {
    QXPoly prev = chi_via_csf(lambda, n, 0, D);
    for (int K = 1; K <= cap; ++K) {
        QXPoly cur = chi_via_csf(lambda, n, K, D);
        if (cur == prev) return K;
        prev = std::move(cur);
    }
    throw std::runtime_error("stabilized_K: cap reached without stabilization");
}

}  // namespace qw
