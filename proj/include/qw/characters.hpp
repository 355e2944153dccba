#ifndef QW_CHARACTERS_HPP
#define QW_CHARACTERS_HPP

#include <gmpxx.h>

#include <vector>

#include "qw/filling.hpp"
#include "qw/partition.hpp"
#include "qw/qxpoly.hpp"

namespace qw {

enum class WhittakerMethod { Inv, Quinv, Fermionic };

/// W_lambda(x_1..x_n; q) via the chosen expansion; the three agree.
QXPoly whittaker(const Partition& lambda, int n, WhittakerMethod method);

/// Sum over all fillings of x^F q^{stat} t^{maj}; inv and quinv variants agree.
TPoly modified_macdonald(const Partition& lambda, int n, bool use_inv);

QXPoly schur(const Partition& lambda, int n);

/// W_lambda(X_n) = sum over mu interlacing lambda of
/// prod_i qbinom(lambda_i - mu_i, mu_i - lambda_{i+1}) W_mu(X_{n-1}) x_n^{|lambda|-|mu|}.
bool branching_check(const Partition& lambda, int n);

/// ||gamma||^2 = sum gamma_i^2 - (sum gamma_i)^2 / n, for gamma in Z^n.
mpq_class norm_sq(const std::vector<int>& gamma, int n);
/// ||lambda||^2 / 2 as an exact integer; requires n | |lambda|.
long half_norm_sq(const Partition& lambda, int n);

/// q^{||lambda||^2/2} (x_1..x_n)^{-|lambda|/n} W_lambda(q^{-1}); requires
/// n | |lambda|. Constant term 1, minimum q-degree 0.
QXPoly normalize_whittaker(const Partition& lambda, int n);

/// Theta(X_n, q) = sum over gamma in Z^n with sum 0 of q^{||gamma||^2/2} x^gamma,
/// truncated to q-degree <= D.
QXPoly theta_truncated(int n, int D);

/// Theta / prod_{k>=1} (1-q^k)^{n-1}, truncated to q-degree <= D.
QXPoly chi_lambda0_truncated(int n, int D);

/// Attach a leftmost column (2..n) and a rightmost column holding 1; shape
/// grows from lambda to lambda + theta, theta = (2,1,...,1,0).
Filling s_map(const Filling& f, int n);

/// F in C_k: the entry 1 occurs in column 1 of F or does not occur in column
/// lambda_1 + 2k (the last column of lambda + k*theta).
bool in_C_k(const Filling& f, int k, const Partition& lambda, int n);

/// lambda + k * theta with theta = (2, 1^{n-2}, 0).
Partition add_k_theta(const Partition& lambda, int k, int n);

/// Renormalized x-weight of F (x-degrees shifted to sum to 0) summed with
/// q^{||lambda+k theta||^2/2 - inv(F)} over k <= K, F in C_k, truncated to
/// q-degree <= D.
QXPoly chi_via_csf(const Partition& lambda, int n, int K, int D);

/// Smallest K <= cap at which two successive chi_via_csf truncations agree;
/// throws if the cap is hit.
int stabilized_K(const Partition& lambda, int n, int D, int cap = 8);

}  // namespace qw

#endif
