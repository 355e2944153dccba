#ifndef QW_QXPOLY_HPP
#define QW_QXPOLY_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qw/partition.hpp"

namespace qw {

/// Exponent vector of a single term: q-exponent, t-exponent and one exponent
/// per x variable. All exponents may be negative (Laurent).
struct Monomial {
    int q = 0;
    int t = 0;
    std::vector<int> x;  // size == nvars of the owning polynomial

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse exact Laurent polynomial in q, t and x_1..x_n with mpz coefficients.
/// Terms are kept in a fixed canonical order (q, then t, then x lex) so that
/// serialization and iteration are deterministic. Zero coefficients are never
/// stored.
class QXPoly {
public:
    explicit QXPoly(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("QXPoly: negative variable count");
    }

    static QXPoly zero(int nvars) { return QXPoly(nvars); }
    static QXPoly constant(int nvars, mpz_class c);
    static QXPoly one(int nvars) { return constant(nvars, 1); }
    static QXPoly monomial(int nvars, Monomial m, mpz_class c = 1);
    static QXPoly var(int nvars, int i);  // x_i, 1-based
    static QXPoly q_power(int nvars, int k);
    static QXPoly t_power(int nvars, int k);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }

    QXPoly& add_term(const Monomial& m, const mpz_class& c);
    mpz_class coeff(const Monomial& m) const;

    QXPoly& operator+=(const QXPoly& o);
    QXPoly& operator-=(const QXPoly& o);
    friend QXPoly operator+(QXPoly a, const QXPoly& b) { return a += b; }
    friend QXPoly operator-(QXPoly a, const QXPoly& b) { return a -= b; }
    friend QXPoly operator*(const QXPoly& a, const QXPoly& b);
    QXPoly& operator*=(const QXPoly& o) { return *this = *this * o; }
    QXPoly operator-() const;
    QXPoly scale(const mpz_class& c) const;

    /// q -> 0 (keeps only terms with q-exponent 0; negative q-exponents reject).
    QXPoly subst_q_zero() const;
    /// q -> q^{-1}.
    QXPoly invert_q() const;
    /// multiply by (x_1 ... x_n)^k.
    QXPoly shift_x_all(int k) const;
    /// multiply by x_i^e.
    QXPoly mul_var_pow(int i, int e) const;
    /// re-embed into a ring with more x variables (new ones with exponent 0).
    QXPoly extend_vars(int new_nvars) const;
    /// exchange x_i and x_j.
    QXPoly swap_vars(int i, int j) const;
    /// coefficient of t^k, as a polynomial with t-exponent 0.
    QXPoly t_coefficient(int k) const;
    /// drop all terms of q-degree > maxdeg.
    QXPoly truncate_q(int maxdeg) const;

    mpz_class eval_all_ones() const;
    int min_q_degree() const;  // 0 for the zero polynomial
    int max_q_degree() const;
    int max_t_degree() const;

    std::string to_string() const;

    friend bool operator==(const QXPoly&, const QXPoly&) = default;

private:
    int nvars_ = 0;
    std::map<Monomial, mpz_class> terms_;
};

/// Same term layout; the t slot is actually used.
using TPoly = QXPoly;

/// Gaussian binomial [k+l choose k] as a polynomial in q alone (nvars 0):
/// the generating function of partitions fitting into a k x l box.
QXPoly qbinom(int k, int l);

/// All partitions fitting into the k x l box, in lexicographically ascending
/// order of their (zero-padded) part vectors; count = C(k+l, k).
std::vector<Partition> box_partitions(int k, int l);

/// gamma in the k x l box  <->  strictly decreasing tuple a with
/// k+l-1 >= a_1 > ... > a_k >= 0, via gamma_p = a_p - (k - p).
std::vector<int> strict_tuple_from_partition(const Partition& gamma, int k, int l);
Partition partition_from_strict_tuple(const std::vector<int>& a, int k, int l);

}  // namespace qw

#endif
