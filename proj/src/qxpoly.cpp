#include "qw/qxpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qw {

QXPoly QXPoly::constant(int nvars, mpz_class c) {
    QXPoly p(nvars);
    p.add_term(Monomial{0, 0, std::vector<int>(nvars, 0)}, c);
    return p;
}

QXPoly QXPoly::monomial(int nvars, Monomial m, mpz_class c) {
    if (static_cast<int>(m.x.size()) != nvars)
        throw std::invalid_argument("QXPoly::monomial: exponent vector size mismatch");
    QXPoly p(nvars);
    p.add_term(m, c);
    return p;
}

QXPoly QXPoly::var(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::out_of_range("QXPoly::var: index out of range");
    Monomial m{0, 0, std::vector<int>(nvars, 0)};
    m.x[i - 1] = 1;
    return monomial(nvars, std::move(m));
}

QXPoly QXPoly::q_power(int nvars, int k) {
    return monomial(nvars, Monomial{k, 0, std::vector<int>(nvars, 0)});
}

QXPoly QXPoly::t_power(int nvars, int k) {
    return monomial(nvars, Monomial{0, k, std::vector<int>(nvars, 0)});
}

QXPoly& QXPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (static_cast<int>(m.x.size()) != nvars_)
        throw std::invalid_argument("QXPoly::add_term: exponent vector size mismatch");
    if (c == 0) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

mpz_class QXPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

QXPoly& QXPoly::operator+=(const QXPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("QXPoly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QXPoly& QXPoly::operator-=(const QXPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("QXPoly: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QXPoly operator*(const QXPoly& a, const QXPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("QXPoly: variable count mismatch");
    QXPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.q + mb.q, ma.t + mb.t, ma.x};
            for (int i = 0; i < a.nvars_; ++i) m.x[i] += mb.x[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

QXPoly QXPoly::operator-() const {
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

QXPoly QXPoly::scale(const mpz_class& c) const {
    QXPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

QXPoly QXPoly::subst_q_zero() const {
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.q < 0) throw std::domain_error("subst_q_zero: negative q-exponent");
        if (m.q == 0) out.terms_.emplace(m, c);
    }
    return out;
}

QXPoly QXPoly::invert_q() const {
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.q = -m2.q;
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

QXPoly QXPoly::shift_x_all(int k) const {
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        for (int& e : m2.x) e += k;
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

QXPoly QXPoly::mul_var_pow(int i, int e) const {
    if (i < 1 || i > nvars_) throw std::out_of_range("mul_var_pow: index out of range");
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.x[i - 1] += e;
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

QXPoly QXPoly::extend_vars(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("extend_vars: shrinking");
    QXPoly out(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.x.resize(new_nvars, 0);
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

QXPoly QXPoly::swap_vars(int i, int j) const {
    if (i < 1 || i > nvars_ || j < 1 || j > nvars_)
        throw std::out_of_range("swap_vars: index out of range");
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        std::swap(m2.x[i - 1], m2.x[j - 1]);
        out.add_term(m2, c);
    }
    return out;
}

QXPoly QXPoly::t_coefficient(int k) const {
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.t != k) continue;
        Monomial m2 = m;
        m2.t = 0;
        out.terms_.emplace(std::move(m2), c);
    }
    return out;
}

QXPoly QXPoly::truncate_q(int maxdeg) const {
    QXPoly out(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.q <= maxdeg) out.terms_.emplace(m, c);
    return out;
}

mpz_class QXPoly::eval_all_ones() const {
    mpz_class s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

int QXPoly::min_q_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.q < d) d = m.q;
        first = false;
    }
    return d;
}

int QXPoly::max_q_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.q > d) d = m.q;
        first = false;
    }
    return d;
}

int QXPoly::max_t_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.t > d) d = m.t;
        first = false;
    }
    return d;
}

std::string QXPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool wrote = false;
        if (a != 1) {
            os << a.get_str();
            wrote = true;
        }
        auto piece = [&](const std::string& name, int e) {
            if (e == 0) return;
            if (wrote) os << " ";
            os << name;
            if (e != 1) os << "^" << e;
            wrote = true;
        };
        piece("q", m.q);
        piece("t", m.t);
        for (int i = 0; i < nvars_; ++i) piece("x" + std::to_string(i + 1), m.x[i]);
        if (!wrote) os << "1";
    }
    return os.str();
}

std::vector<Partition> box_partitions(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("box_partitions: negative argument");
    // Lex ascending on the k-padded part vectors.
    std::vector<Partition> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int i, int maxp) -> void {
        if (i == k) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = 0; v <= maxp; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    if (k == 0) {
        out.push_back(Partition{});
    } else {
        rec(rec, 0, l);
    }
    return out;
}

QXPoly qbinom(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("qbinom: negative argument");
    static std::map<std::pair<int, int>, QXPoly> memo;
    auto it = memo.find({k, l});
    if (it != memo.end()) return it->second;
    QXPoly out(0);
    for (const Partition& g : box_partitions(k, l)) out += QXPoly::q_power(0, g.size());
    memo.emplace(std::pair{k, l}, out);
    return out;
}

std::vector<int> strict_tuple_from_partition(const Partition& gamma, int k, int l) {
    if (gamma.num_parts() > k || gamma.part(1) > l)
        throw std::invalid_argument("strict_tuple_from_partition: box violation");
    std::vector<int> a(k);
    for (int p = 1; p <= k; ++p) a[p - 1] = gamma.part(p) + (k - p);
    return a;
}

Partition partition_from_strict_tuple(const std::vector<int>& a, int k, int l) {
    if (static_cast<int>(a.size()) != k)
        throw std::invalid_argument("partition_from_strict_tuple: wrong length");
    std::vector<int> g(k);
    for (int p = 1; p <= k; ++p) {
        if (p >= 2 && a[p - 1] >= a[p - 2])
            throw std::invalid_argument("partition_from_strict_tuple: tuple not strictly decreasing");
        g[p - 1] = a[p - 1] - (k - p);
        if (g[p - 1] < 0 || g[p - 1] > l)
            throw std::invalid_argument("partition_from_strict_tuple: box violation");
    }
    return Partition(std::move(g));
}

}  // namespace qw
