#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pxp1/basis.hpp"

namespace pxp1 {

/// Real Hermitian operator in row-compressed storage. No explicit zeros.
struct SparseOperator {
    std::int64_t dim = 0;
    bool hermitian = true;
    std::vector<std::int64_t> row_ptr;  // dim + 1
    std::vector<std::int32_t> col;
    std::vector<double> val;

    std::int64_t nnz() const { return static_cast<std::int64_t>(col.size()); }

    void apply(const double* x, double* y) const;
    void apply(const std::complex<double>* x, std::complex<double>* y) const;
    std::vector<double> apply(const std::vector<double>& x) const;

    double max_abs_entry() const;
    /// max |A - A^T| over entries.
    double hermiticity_violation() const;
    SparseOperator transposed() const;

    static SparseOperator diagonal(const std::vector<double>& d);
    static SparseOperator identity(std::int64_t n);
};

/// max over entries of |AB - BA|.
double commutator_max_abs(const SparseOperator& a, const SparseOperator& b);
/// max over entries of |AB + BA|.
double anticommutator_max_abs(const SparseOperator& a, const SparseOperator& b);

/// The single-site S^x action |0> <-> (|+> + |->)/sqrt2: site i, current
/// digit d flips to 0 if d is +-1-like, and to each of -,+ if d is the zero
/// state; a flip survives iff the new configuration still satisfies the
/// constraints (projector sandwich = membership filter). Calls
/// f(site, new_digit, target_code) for each legal flip.
template <class F>
void for_each_flip(const ConstraintSet& cs, int L, Boundary bc, std::uint64_t code, F&& f) {
    const bool pbc = bc == Boundary::PBC;
    int digits[64];
    {
        std::uint64_t c = code;
        for (int i = 0; i < L; ++i) {
            digits[i] = static_cast<int>(c % 3);
            c /= 3;
        }
    }
    auto bonds_ok = [&](int site, int nd) {
        if (L == 1) return !pbc || cs.allowed(nd, nd);
        if (site > 0 || pbc) {
            const int left = digits[(site + L - 1) % L];
            if (cs.forbidden(left, nd)) return false;
        }
        if (site < L - 1 || pbc) {
            const int right = digits[(site + 1) % L];
            if (cs.forbidden(nd, right)) return false;
        }
        return true;
    };
    std::uint64_t p3 = 1;
    for (int site = 0; site < L; ++site, p3 *= 3) {
        const int d = digits[site];
        if (d == 1) {
            if (bonds_ok(site, 0)) f(site, 0, code - p3);
            if (bonds_ok(site, 2)) f(site, 2, code + p3);
        } else {
            if (bonds_ok(site, 1)) f(site, 1, code + (d == 0 ? p3 : -p3));
        }
    }
}

template <class F>
void for_each_flip(const ConstrainedBasis& basis, std::uint64_t code, F&& f) {
    for_each_flip(basis.constraint(), basis.length(), basis.boundary(), code,
                  std::forward<F>(f));
}

/// H = sum_i P S^x_i P on the constrained basis; every entry is +1/sqrt2.
SparseOperator build_hamiltonian(const ConstrainedBasis& basis);

/// Diagonal operator counting adjacent |++| pairs (wrapping under PBC).
SparseOperator conserved_Npp(const ConstrainedBasis& basis);

/// Operator swapping |+> <-> |-> at one site and fixing |0>. For Model-II
/// the swap never leaves the basis and O_i is involutive. For other
/// constraint sets the bare swap can exit the basis: by default this
/// signals flip_leaves_basis; with allow_projection the projected operator
/// P O_i P is returned instead (used as a negative control).
SparseOperator conserved_Oi(const ConstrainedBasis& basis, int site,
                            bool allow_projection = false);

/// Diagonal operator counting contiguous occurrences of a motif (string
/// over {-,0,+}), with wraparound under PBC. Motifs longer than L count 0.
SparseOperator motif_projector(const ConstrainedBasis& basis, std::string_view motif);

/// Occurrence count of a motif in a single configuration.
int count_motif(std::uint64_t code, int length, Boundary bc, std::string_view motif);

}  // namespace pxp1
