#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pxp1/basis.hpp"
#include "pxp1/hamiltonian.hpp"
#include "pxp1/symmetry.hpp"

namespace pxp1 {

/// Full spectrum of a real symmetric operator. Eigenvalues ascending;
/// eigenvector j is vectors[j*dim .. (j+1)*dim) when kept.
struct EigenSystem {
    std::int64_t dim = 0;
    std::vector<double> energies;
    std::vector<double> vectors;  // column-major, empty if not requested

    const double* eigenvector(std::int64_t j) const {
        return vectors.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(dim);
    }
};

/// Dense-path full diagonalization (LAPACK); throws
/// too_large_for_full_spectrum above dense_limit with guidance to use a
/// symmetry sector.
EigenSystem diagonalize(const SparseOperator& h, std::int64_t dense_limit = 20000,
                        bool keep_vectors = true);

/// <v| sum_i S^z_i |v>.
double magnetization(std::span<const double> vec, const ConstrainedBasis& basis);
/// Same for a sector vector (S_z is constant on symmetry orbits).
double magnetization(std::span<const double> vec, const SymmetrySector& sector);

/// Per-config S_z values, usable as a diagonal observable.
std::vector<double> sz_diagonal(const ConstrainedBasis& basis);
std::vector<double> sz_diagonal(const SymmetrySector& sector);

/// <k| D |k> for every eigenstate of an EigenSystem, D diagonal.
std::vector<double> eigenstate_diagonal_expectation(const EigenSystem& es,
                                                    std::span<const double> diag);

/// Half-cut bipartition of a constrained chain. The two halves are
/// embedded as OBC string spaces over {-,0,+}; amplitudes are grouped into
/// M[left-string, right-string] and the entanglement data comes from the
/// singular values of M. Precomputes the index split once per (basis, cut).
class HalfCutSplitter {
  public:
    HalfCutSplitter(const ConstrainedBasis& basis, int cut);

    std::int64_t dim_left() const { return dim_left_; }
    std::int64_t dim_right() const { return dim_right_; }

    /// Schmidt squares, descending, for a normalized state.
    std::vector<double> schmidt_squares(std::span<const double> amps) const;
    /// Von Neumann entropy in nats (0 ln 0 = 0).
    double entropy(std::span<const double> amps) const;
    double entropy(std::span<const std::complex<double>> amps) const;

  private:
    std::vector<std::int32_t> left_, right_;
    std::int64_t dim_left_ = 0, dim_right_ = 0;
};

/// One-off versions for states given as sparse (code, amplitude) lists.
std::vector<double> schmidt_squares(std::span<const std::pair<std::uint64_t, double>> amps,
                                    int length, int cut);
double entanglement_entropy(std::span<const std::pair<std::uint64_t, double>> amps,
                            int length, int cut);
double entanglement_entropy(std::span<const double> vec, const ConstrainedBasis& basis, int cut);

struct GibbsPoint {
    double energy;
    double beta;
    double value;
};

/// For each target energy solve Tr[rho_beta H] = E by bisection over
/// beta in [-beta_max, beta_max], then report Tr[rho_beta D]. Targets
/// outside (min E, max E) throw energy_out_of_range.
std::vector<GibbsPoint> gibbs_curve(const std::vector<double>& energies,
                                    const std::vector<double>& diag_expectation,
                                    std::span<const double> targets, double beta_max = 50.0,
                                    double energy_tol = 1e-10);

/// Exact integer-energy eigenstates of Model-I (PBC): the E = +-1 family
/// (three translation-symmetrized patterns, L >= 5) and the E = +-2 family
/// (six patterns, L even >= 10).
struct SpecialState {
    int family;  // n: 1 or 2
    int sign;    // +-1
    int length;
    double energy;  // sign * family
    std::vector<std::pair<std::uint64_t, double>> amplitudes;  // sorted by code
};

SpecialState build_special_state(int family, int sign, int length);

double magnetization(const SpecialState& s);
/// || H psi - E psi ||, H applied matrix-free under Model-I constraints.
double special_state_residual(const SpecialState& s);
/// Reduced density matrix of one site, rho[a][b] in digit order -,0,+.
std::array<std::array<double, 3>, 3> single_site_rdm(const SpecialState& s, int site = 0);
std::vector<double> densify(const SpecialState& s, const ConstrainedBasis& basis);

/// Eigenreport CSV rows: index,energy,S_z,S_half,degeneracy_group.
struct EigenReportRow {
    std::int64_t index;
    double energy;
    double sz;
    double s_half;
    std::int64_t degeneracy_group;
};

/// Observables for every eigenstate of a sector eigensystem (S_z from the
/// orbit-constant diagonal, S_half by lifting to the parent basis);
/// parallel over states.
std::vector<EigenReportRow> eigen_report(const EigenSystem& es, const SymmetrySector& sector,
                                         int cut, double degeneracy_tol = 1e-10);
std::vector<EigenReportRow> eigen_report(const EigenSystem& es, const ConstrainedBasis& basis,
                                         int cut, double degeneracy_tol = 1e-10);

}  // namespace pxp1
