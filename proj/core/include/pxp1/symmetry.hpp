#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pxp1/basis.hpp"
#include "pxp1/hamiltonian.hpp"

namespace pxp1 {

/// Diagonal signs of C = prod_i (2 (S^z_i)^2 - 1): s = (-1)^(number of |0> sites).
std::vector<double> particle_hole_signs(const ConstrainedBasis& basis);
int particle_hole_sign(std::uint64_t code, int length);

/// Componentwise multiply by s(config); involutive.
void apply_particle_hole(const ConstrainedBasis& basis, std::span<double> vec);

/// max |{H, C}| entry; C diagonal means this is max |H_uv (s_u + s_v)|,
/// zero exactly iff C H C = -H entrywise.
double verify_anticommutation(const SparseOperator& h, const ConstrainedBasis& basis);

/// Momentum / inversion symmetry-reduced sector of a PBC basis.
///
/// Orbits are generated by translation T (site i -> i+1) and, when the
/// inversion quantum number sigma = +-1 is resolved, by the reflection
/// site i -> (L-1-i+axis_offset) mod L. Inversion can only be resolved at
/// k in {0, L/2}, where the momentum projector is real; other momenta are
/// supported with complex phases (inversion = 0) for counting and
/// orthogonality checks. Representatives are the minimal code per orbit;
/// sector basis vectors are orthonormal in the parent basis.
class SymmetrySector {
  public:
    static SymmetrySector build(const ConstrainedBasis& basis, int k, int inversion,
                                int axis_offset = 0);

    std::int64_t dimension() const { return static_cast<std::int64_t>(reps_.size()); }
    const ConstrainedBasis& parent() const { return *parent_; }
    int momentum() const { return k_; }
    int inversion() const { return inv_; }
    int axis_offset() const { return axis_; }
    /// True when momentum phases are +-1 (k = 0 or L/2) and sector vectors
    /// are real.
    bool real_phases() const;

    std::uint64_t representative(std::int64_t v) const { return reps_[static_cast<std::size_t>(v)]; }

    struct Entry {
        std::int64_t full_index;
        std::complex<double> coeff;
    };
    std::span<const Entry> entries(std::int64_t v) const;

    /// full_vec = sum_v sector_vec[v] * (sector basis vector v); real path.
    void lift(std::span<const double> sector_vec, std::span<double> full_vec) const;
    std::vector<std::complex<double>> lift(std::span<const std::complex<double>> sector_vec) const;

  private:
    const ConstrainedBasis* parent_ = nullptr;
    int k_ = 0, inv_ = 0, axis_ = 0;
    std::vector<std::uint64_t> reps_;
    std::vector<std::int64_t> ptr_;
    std::vector<Entry> entries_;
};

/// Real symmetric Hamiltonian in the symmetry-adapted basis; throws
/// requires_real_sector unless k in {0, L/2}.
SparseOperator build_sector_hamiltonian(const SymmetrySector& sector);

/// Structured text report: k, I, dimension, per-orbit representatives.
void export_sector_report(std::ostream& os, const SymmetrySector& sector);

}  // namespace pxp1
