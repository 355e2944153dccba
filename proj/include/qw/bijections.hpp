#ifndef QW_BIJECTIONS_HPP
#define QW_BIJECTIONS_HPP

#include "qw/filling.hpp"
#include "qw/gt.hpp"

namespace qw {

/// CSF(lambda, n) -> POP(lambda, n). GT part is gt_from_ssyt(rowsort(F));
/// overlay (i,j) lists zcount over cells_with_entry(i,j,F) right-to-left.
/// Overlay weight equals quinv(F).
POP psi_quinv(const Filling& f);

/// Same GT part; overlay lists zcb left-to-right; weight equals inv(F).
/// Satisfies psi_inv = bcomp of psi_quinv.
POP psi_inv(const Filling& f);

POP psi(const Filling& f, bool use_inv);

/// Row-by-row candidate constructions inverting the maps above.
Filling psi_quinv_inverse(const POP& p);
Filling psi_inv_inverse(const POP& p);
Filling psi_inverse(const POP& p, bool use_inv);

/// Involution on CSF(lambda, n) swapping inv and quinv, fixing rowsort:
/// psi_inv_inverse . bcomp . psi_inv.
Filling omega(const Filling& f);

}  // namespace qw

#endif
