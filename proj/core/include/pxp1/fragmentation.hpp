#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pxp1/basis.hpp"
#include "pxp1/hamiltonian.hpp"

namespace pxp1 {

/// Connected components of the configuration graph whose edges are the
/// nonzero off-diagonal entries of H. Components are discovered by
/// breadth-first search in basis order; member lists are ascending.
struct FragmentDecomposition {
    std::vector<std::int32_t> component_of;            // per basis index
    std::vector<std::vector<std::int64_t>> components;  // discovery order

    std::int64_t count() const { return static_cast<std::int64_t>(components.size()); }
    /// Component sizes sorted descending.
    std::vector<std::int64_t> size_histogram() const;
    /// Index of the largest / n-th largest component (ties by discovery order).
    std::int64_t nth_largest(int n) const;
};

FragmentDecomposition decompose(const SparseOperator& h);

/// Motif count of a component's minimal member plus whether the count is
/// the same for every member.
std::pair<int, bool> component_motif_label(const ConstrainedBasis& basis,
                                           const std::vector<std::int64_t>& component,
                                           std::string_view motif);

/// Same for a component of a sector Hamiltonian: members are sector basis
/// vectors, whose orbits carry well-defined counts for palindromic motifs.
class SymmetrySector;
std::pair<int, bool> component_motif_label(const SymmetrySector& sector,
                                           const std::vector<std::int64_t>& component,
                                           std::string_view motif);

struct InertCensus {
    int length;
    Boundary boundary;
    std::uint64_t count;
    std::vector<std::uint64_t> states;  // filled only when requested
};

/// States annihilated by every Hamiltonian term: every single-site flip
/// exits the basis. Works for any constraint set; Model-I is the paper's
/// case (no |0>, no three consecutive |->, no isolated |+>).
InertCensus enumerate_inert(const ConstraintSet& constraint, int length, Boundary bc,
                            bool keep_states = false);

/// Exact integer closed forms for the Model-I inert count,
/// I^PBC_L = Lucas(L) + 2 cos(pi L / 2) and
/// I^OBC_L = (3 Lucas(L) + 5 Fib(L) + 4 cos(pi L/2) - 8 sin(pi L/2)) / 10.
std::uint64_t inert_count_closed_form(int length, Boundary bc);

/// Orthonormal basis of the Model-II sector with O_i eigenvalue labels[i].
/// Sites labeled -1 carry |O-> = (|+> - |->)/sqrt2; sites labeled +1 carry
/// |O1+> = (|+> + |->)/sqrt2 or |O2+> = |0>, with no two chain-adjacent
/// |O2+> choices (that component would violate the no-|00> constraint).
/// pxp_patterns[v] has bit i set when vector v picks |O2+> at site i, so
/// within a +1 island the vectors enumerate a spin-1/2 PXP basis
/// (down = |O1+>, up = |O2+>).
struct Model2Sector {
    std::vector<int> labels;
    std::vector<std::uint64_t> pxp_patterns;
    std::vector<std::vector<std::pair<std::int64_t, double>>> vectors;

    std::int64_t dimension() const { return static_cast<std::int64_t>(vectors.size()); }
};

Model2Sector sector_decomposition_model2(const ConstrainedBasis& basis,
                                         const std::vector<int>& labels);

/// Sector dimension without building vectors: product of per-island
/// spin-1/2 PXP counts (Fibonacci for linear islands, Lucas for the
/// all-(+1) ring under PBC).
std::uint64_t model2_sector_dimension(const std::vector<int>& labels, Boundary bc);

/// Dense n x n (column-major) matrix of H restricted to a span of sparse
/// orthonormal vectors over the basis.
std::vector<double> dense_subspace_matrix(
    const SparseOperator& h,
    const std::vector<std::vector<std::pair<std::int64_t, double>>>& vectors);

/// Fragment census CSV: component_id,size,N_pp,N_ppp,extra_labels,min_code
/// sorted by (size desc, min_code asc).
void export_fragment_census(std::ostream& os, const ConstrainedBasis& basis,
                            const FragmentDecomposition& frags);

}  // namespace pxp1
