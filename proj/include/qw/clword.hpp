#ifndef QW_CLWORD_HPP
#define QW_CLWORD_HPP

#include <string>
#include <vector>

#include "qw/bijections.hpp"
#include "qw/filling.hpp"
#include "qw/gt.hpp"

namespace qw {

/// One current-algebra factor E_{p,q} tensor t^t_exp with p > q >= 1.
struct CLAtom {
    int p = 0;
    int q = 0;
    int t_exp = 0;
    friend bool operator==(const CLAtom&, const CLAtom&) = default;
};

/// Formal ordered product of atoms. Canonical form: atoms grouped by the
/// column index q ascending, then row index p ascending, then t_exp
/// descending. Zero-exponent atoms are kept; the word remembers every part
/// of every overlay.
class CLWord {
public:
    CLWord() = default;
    explicit CLWord(std::vector<CLAtom> atoms);  // canonicalizes

    const std::vector<CLAtom>& atoms() const { return atoms_; }
    long total_t_degree() const;
    std::string to_string() const;  // "(E_{2,1} (x) t^2)(E_{2,1} (x) t)..."

    friend bool operator==(const CLWord&, const CLWord&) = default;

private:
    std::vector<CLAtom> atoms_;
};

/// Atom E_{j+1,i} tensor t^m for every part m of every overlay (i,j),
/// including zero parts.
CLWord cl_monomial(const POP& p);

/// CSF-native construction: atom E_{F(c), row(c)} tensor t^{zcount(c)} (quinv)
/// or t^{zcb(c)} (inv) over cells with F(c) > row(c). Equals
/// cl_monomial(psi_stat(F)) in canonical form.
CLWord b_stat(const Filling& f, bool use_inv);

}  // namespace qw

#endif
