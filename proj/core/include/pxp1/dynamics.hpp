#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pxp1/basis.hpp"
#include "pxp1/hamiltonian.hpp"

namespace pxp1 {

enum class EvolveMethod { Spectral, KrylovStep };

struct QuenchParams {
    double t_max = 30.0;
    double dt = 0.05;
    EvolveMethod method = EvolveMethod::KrylovStep;
    double krylov_tol = 1e-12;  // local step error target
    int krylov_max_dim = 48;
    std::int64_t dense_limit = 6000;  // spectral path size cap
    int entropy_cut = -1;             // default L/2
    int z2_plus_parity = 1;
};

/// Time series from evolving |Z2>; all series share the time grid.
/// o_avg is the site-averaged (|+><+|)_i (|+><+|)_{i+1} expectation,
/// i.e. <N_++>/L with PBC wrap.
struct QuenchResult {
    std::vector<double> t;
    std::vector<double> fidelity;
    std::vector<double> o_avg;
    std::vector<double> s_half;
    std::vector<double> energy;
    std::vector<double> norm;
};

QuenchResult evolve_z2(const SparseOperator& h, const ConstrainedBasis& basis,
                       const QuenchParams& params = {});

/// Projection weights of |Z2> on every O-label sector of Model-II,
/// in lexicographic label order ('-' before '+', site 0 first). Weights
/// are exact dyadics; each equals 2^-L.
std::vector<std::pair<std::string, double>> z2_sector_weights_model2(
    const ConstrainedBasis& basis, int z2_plus_parity = 1);

/// Least-squares slope of y(t) restricted to t in [t0, t1].
double series_slope(const std::vector<double>& t, const std::vector<double>& y, double t0,
                    double t1);

struct EntropyGrowthReport {
    double slope_model1;
    double slope_model2;
    double slope_model3;
    double window_t0, window_t1;
    bool ordering_holds;  // slope I < II < III
};

EntropyGrowthReport entropy_growth_comparison(const QuenchResult& model1,
                                              const QuenchResult& model2,
                                              const QuenchResult& model3, double t0 = 0.25,
                                              double t1 = 2.0);

}  // namespace pxp1
