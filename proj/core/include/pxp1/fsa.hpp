#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pxp1/basis.hpp"
#include "pxp1/hamiltonian.hpp"

namespace pxp1 {

/// H = H+ + H- relative to |Z2>: H+ raises m on the |->-sublattice and
/// lowers on the |+>-sublattice, so H- |Z2> = 0 and H+ |Z2bar> = 0;
/// H- = (H+)^T. z2_plus_parity is the 0-based parity of the sites holding
/// |+> in |Z2> (1 for the paper's |-+-+...>).
struct HamiltonianSplit {
    SparseOperator plus;
    SparseOperator minus;
    int z2_plus_parity = 1;
    std::int64_t z2_index = -1;
    std::int64_t z2bar_index = -1;
};

HamiltonianSplit split_hamiltonian(const SparseOperator& h, const ConstrainedBasis& basis,
                                   int z2_plus_parity = 1);

std::uint64_t z2_code(int length, int plus_parity = 1);

enum class DeltaConvention { Norm, SquaredNorm };

/// beta_n is always the Euclidean norm of H+ |v_{n-1}>; delta_n is the
/// mismatch ||H- |v_n> - beta_n |v_{n-1}>|| either squared (the convention
/// reproducing the paper's closed forms) or plain.
struct FsaRun {
    int length = 0;
    DeltaConvention convention = DeltaConvention::SquaredNorm;
    std::vector<double> beta;    // beta_1 .. beta_2L
    std::vector<double> delta;   // delta_1 .. delta_2L
    int first_error_index = -1;  // n_f, 1-based; -1 if all zero
    double delta_total = 0.0;
    std::vector<std::vector<double>> vectors;  // v_0 .. v_2L when retained

    std::vector<double> hfsa_offdiagonal() const { return beta; }  // dim 2L+1 tridiagonal
};

FsaRun forward_scatter(const HamiltonianSplit& split, const ConstrainedBasis& basis,
                       bool keep_vectors = false,
                       DeltaConvention convention = DeltaConvention::SquaredNorm,
                       double zero_tol = 1e-12);

/// Closed forms for the first nonzero FSA error, evaluated exactly as
/// rationals:
///   Model-I   (n_f = 5): 12(L^3-6L^2+11L-18) /
///                        [(L-1)(L-2)(L-3)(5L^4-50L^3+175L^2-250L+144)]
///   Model-II  (n_f = 3): 50(2L-9) / [(2L-5)(6L^2-45L+95)]
///   Model-III (n_f = 2): 1 / [4(4L-11)]
double analytic_first_error(ModelPreset model, int length);
int analytic_first_error_step(ModelPreset model);

struct FsaOverlap {
    double energy;
    double z2_overlap_sq;
};

/// Diagonalize the tridiagonal H_FSA, lift its eigenvectors through the
/// retained FSA vectors and report |<Z2|state>|^2 per FSA eigenstate.
std::vector<FsaOverlap> fsa_spectrum_and_overlap(const FsaRun& run,
                                                 const ConstrainedBasis& basis);

}  // namespace pxp1
