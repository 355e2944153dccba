#include "qw/clword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qw {

namespace {

// Block order of Eq-style grouping: column index q ascending, then row index
// p ascending, then t exponent descending.
bool atom_less(const CLAtom& a, const CLAtom& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.p != b.p) return a.p < b.p;
    return a.t_exp > b.t_exp;
}

}  // namespace

CLWord::CLWord(std::vector<CLAtom> atoms) : atoms_(std::move(atoms)) {
    for (const CLAtom& a : atoms_)
        if (!(a.p > a.q && a.q >= 1 && a.t_exp >= 0))
            throw std::invalid_argument("CLWord: bad atom");
    std::sort(atoms_.begin(), atoms_.end(), atom_less);
}

long CLWord::total_t_degree() const {
    long s = 0;
    for (const CLAtom& a : atoms_) s += a.t_exp;
    return s;
}

std::string CLWord::to_string() const {
    if (atoms_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < atoms_.size();) {
        std::size_t j = i;
        while (j < atoms_.size() && atoms_[j] == atoms_[i]) ++j;
        os << "(E_{" << atoms_[i].p << "," << atoms_[i].q << "} (x) t";
        if (atoms_[i].t_exp != 1) os << "^" << atoms_[i].t_exp;
        os << ")";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

CLWord cl_monomial(const POP& p) {
    std::vector<CLAtom> atoms;
    for (const auto& [key, parts] : p.overlay()) {
        auto [i, j] = key;
        for (int m : parts) atoms.push_back(CLAtom{j + 1, i, m});
    }
    return CLWord(std::move(atoms));
}

CLWord b_stat(const Filling& f, bool use_inv) {
    if (!f.is_partition_shape()) throw std::invalid_argument("b_stat: non-partition shape");
    std::vector<CLAtom> atoms;
    for (int i = 1; i <= f.num_rows(); ++i) {
        for (Cell c : f.row_cells(i)) {
            int e = f.entry(c);
            if (e <= i) continue;
            atoms.push_back(CLAtom{e, i, use_inv ? zcb(c, f) : zcount(c, f)});
        }
    }
    return CLWord(std::move(atoms));
}

}  // namespace qw
