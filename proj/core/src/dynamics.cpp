#include "pxp1/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pxp1/fsa.hpp"
#include "pxp1/linalg.hpp"
#include "pxp1/spectral.hpp"

namespace pxp1 {

namespace {

using cplx = std::complex<double>;

// psi <- exp(-i dt H) psi via an adaptive Lanczos subspace; returns the
// subspace size used.
int krylov_step(const SparseOperator& h, std::vector<cplx>& psi, double dt, double tol,
                int max_dim) {
    const std::size_t dim = psi.size();
    double norm0 = 0.0;
    for (const cplx& x : psi) norm0 += std::norm(x);
    norm0 = std::sqrt(norm0);
    if (norm0 == 0.0) return 0;

    std::vector<std::vector<cplx>> v;
    v.emplace_back(dim);
    for (std::size_t i = 0; i < dim; ++i) v[0][i] = psi[i] / norm0;

    std::vector<double> alpha, beta;
    std::vector<cplx> w(dim), u_prev;
    int m = 0;
    bool breakdown = false;
    while (m < max_dim) {
        h.apply(v[static_cast<std::size_t>(m)].data(), w.data());
        double a = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            a += (std::conj(v[static_cast<std::size_t>(m)][i]) * w[i]).real();
        alpha.push_back(a);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= a * v[static_cast<std::size_t>(m)][i];
        if (m > 0) {
            const double b = beta[static_cast<std::size_t>(m) - 1];
            for (std::size_t i = 0; i < dim; ++i)
                w[i] -= b * v[static_cast<std::size_t>(m) - 1][i];
        }
        // one full re-orthogonalization pass keeps the small subspace clean
        for (int j = 0; j <= m; ++j) {
            cplx ovl = 0.0;
            for (std::size_t i = 0; i < dim; ++i)
                ovl += std::conj(v[static_cast<std::size_t>(j)][i]) * w[i];
            if (std::abs(ovl) > 0.0)
                for (std::size_t i = 0; i < dim; ++i) w[i] -= ovl * v[static_cast<std::size_t>(j)][i];
        }
        double b2 = 0.0;
        for (const cplx& x : w) b2 += std::norm(x);
        const double b = std::sqrt(b2);
        ++m;

        // exp(-i dt T_m) e1
        std::vector<double> evals, z;
        linalg::tridiag_eig(alpha, beta, evals, z, true);
        std::vector<cplx> u(static_cast<std::size_t>(m), 0.0);
        for (int k = 0; k < m; ++k) {
            const cplx phase = std::polar(1.0, -dt * evals[static_cast<std::size_t>(k)]);
            const double q0 = z[static_cast<std::size_t>(k * m)];
            for (int n = 0; n < m; ++n)
                u[static_cast<std::size_t>(n)] += z[static_cast<std::size_t>(n + k * m)] * phase * q0;
        }

        bool converged = false;
        if (b <= 1e-13) {
            breakdown = true;  // invariant subspace: expansion is exact
            converged = true;
        } else if (!u_prev.empty()) {
            double diff2 = std::norm(u[static_cast<std::size_t>(m) - 1]);
            for (int n = 0; n + 1 < m; ++n)
                diff2 += std::norm(u[static_cast<std::size_t>(n)] - u_prev[static_cast<std::size_t>(n)]);
            converged = std::sqrt(diff2) <= tol;
        }
        if (converged || m == max_dim) {
            if (!converged && !breakdown && m == max_dim)
                throw error("krylov_step did not reach the local tolerance; reduce dt");
            for (std::size_t i = 0; i < dim; ++i) {
                cplx acc = 0.0;
                for (int n = 0; n < m; ++n) acc += u[static_cast<std::size_t>(n)] * v[static_cast<std::size_t>(n)][i];
                psi[i] = norm0 * acc;
            }
            return m;
        }
        u_prev = std::move(u);
        beta.push_back(b);
        v.emplace_back(dim);
        for (std::size_t i = 0; i < dim; ++i) v.back()[i] = w[i] / b;
    }
    return m;
}

}  // namespace

QuenchResult evolve_z2(const SparseOperator& h, const ConstrainedBasis& basis,
                       const QuenchParams& params) {
    if (h.dim != basis.dimension())
        throw dimension_mismatch("evolve_z2: operator/basis dimension mismatch");
    if (basis.length() % 2 != 0) throw error("evolve_z2: |Z2> needs even L");
    if (params.dt <= 0.0) throw error("evolve_z2: dt must be positive");
    const std::int64_t z2 = basis.index_of(z2_code(basis.length(), params.z2_plus_parity));
    if (z2 < 0) throw z2_not_in_basis("|Z2> is not in this basis");

    const int cut = params.entropy_cut > 0 ? params.entropy_cut : basis.length() / 2;
    HalfCutSplitter splitter(basis, cut);

    std::vector<double> npp(static_cast<std::size_t>(basis.dimension()));
    for (std::int64_t i = 0; i < basis.dimension(); ++i)
        npp[static_cast<std::size_t>(i)] =
            count_motif(basis.code(i), basis.length(), basis.boundary(), "++");

    const int n_steps = static_cast<int>(std::llround(params.t_max / params.dt));
    QuenchResult res;
    const auto reserve = static_cast<std::size_t>(n_steps) + 1;
    res.t.reserve(reserve);
    res.fidelity.reserve(reserve);
    res.o_avg.reserve(reserve);
    res.s_half.reserve(reserve);
    res.energy.reserve(reserve);
    res.norm.reserve(reserve);

    const auto dim = static_cast<std::size_t>(basis.dimension());
    std::vector<cplx> psi(dim, 0.0), scratch(dim);
    psi[static_cast<std::size_t>(z2)] = 1.0;

    auto sample = [&](double t) {
        double nrm2 = 0.0, o = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double p = std::norm(psi[i]);
            nrm2 += p;
            o += p * npp[i];
        }
        h.apply(psi.data(), scratch.data());
        double e = 0.0;
        for (std::size_t i = 0; i < dim; ++i) e += (std::conj(psi[i]) * scratch[i]).real();
        res.t.push_back(t);
        res.fidelity.push_back(std::norm(psi[static_cast<std::size_t>(z2)]));
        res.o_avg.push_back(o / basis.length());
        res.s_half.push_back(splitter.entropy(std::span<const cplx>(psi)));
        res.energy.push_back(e);
        res.norm.push_back(std::sqrt(nrm2));
    };

    if (params.method == EvolveMethod::Spectral) {
        if (h.dim > params.dense_limit)
            throw method_infeasible("spectral evolution needs dimension <= " +
                                    std::to_string(params.dense_limit) + ", got " +
                                    std::to_string(h.dim) + "; use KRYLOV_STEP");
        EigenSystem es = diagonalize(h, params.dense_limit, true);
        std::vector<double> c(dim);
        for (std::size_t k = 0; k < dim; ++k)
            c[k] = es.vectors[static_cast<std::size_t>(z2) + k * dim];
        std::vector<cplx> phase(dim);
        sample(0.0);
        for (int s = 1; s <= n_steps; ++s) {
            const double t = s * params.dt;
            for (std::size_t k = 0; k < dim; ++k)
                phase[k] = std::polar(c[k], -es.energies[k] * t);
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(dim); ++i) {
                cplx acc = 0.0;
                for (std::size_t k = 0; k < dim; ++k)
                    acc += es.vectors[static_cast<std::size_t>(i) + k * dim] * phase[k];
                psi[static_cast<std::size_t>(i)] = acc;
            }
            sample(t);
        }
    } else {
        sample(0.0);
        for (int s = 1; s <= n_steps; ++s) {
            krylov_step(h, psi, params.dt, params.krylov_tol, params.krylov_max_dim);
            sample(s * params.dt);
        }
    }
    return res;
}

std::vector<std::pair<std::string, double>> z2_sector_weights_model2(
    const ConstrainedBasis& basis, int z2_plus_parity) {
    if (!(basis.constraint() == ConstraintSet::preset(ModelPreset::ModelII)))
        throw error("z2_sector_weights_model2 requires a Model-II basis");
    const int L = basis.length();
    if (L % 2 != 0) throw error("|Z2> needs even L");
    if (L > 26) throw error("2^L sectors is too many beyond L = 26");
    const bool pbc = basis.boundary() == Boundary::PBC;

    // per-site overlap factors with |Z2>: <O1+|m> = 1/sqrt2,
    // <O2+|m> = 0, <O-|+> = 1/sqrt2, <O-|-> = -1/sqrt2. Signs and powers of
    // 1/sqrt2 are tracked exactly; O2+ branches are pruned as exact zeros.
    std::vector<std::pair<std::string, double>> out;
    out.reserve(1ull << L);
    std::vector<int> labels(static_cast<std::size_t>(L));
    std::vector<int> choice(static_cast<std::size_t>(L));
    for (std::uint64_t mask = 0; mask < (1ull << L); ++mask) {
        std::string name(static_cast<std::size_t>(L), '-');
        for (int i = 0; i < L; ++i) {
            labels[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
            if (labels[static_cast<std::size_t>(i)] == 1) name[static_cast<std::size_t>(i)] = '+';
        }
        double weight = 0.0;
        // DFS over island PXP patterns, pruning any O2+ choice (factor 0)
        auto rec = [&](auto&& self, int pos, int half_powers, int sign) -> void {
            if (pos == L) {
                if (pbc && L > 1 && choice[static_cast<std::size_t>(L) - 1] == 1 && choice[0] == 1)
                    return;
                (void)sign;  // weight is |overlap|^2
                weight += std::ldexp(1.0, -half_powers);
                return;
            }
            const bool z2_plus = pos % 2 == z2_plus_parity;
            if (labels[static_cast<std::size_t>(pos)] == -1) {
                choice[static_cast<std::size_t>(pos)] = 2;
                self(self, pos + 1, half_powers + 1, z2_plus ? sign : -sign);
                return;
            }
            choice[static_cast<std::size_t>(pos)] = 0;  // O1+
            self(self, pos + 1, half_powers + 1, sign);
            // O2+ has zero overlap with |Z2>; the branch contributes nothing
        };
        rec(rec, 0, 0, 1);
        out.emplace_back(std::move(name), weight);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

double series_slope(const std::vector<double>& t, const std::vector<double>& y, double t0,
                    double t1) {
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::int64_t n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t0 || t[i] > t1) continue;
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
        ++n;
    }
    if (n < 2) throw error("series_slope: fewer than two samples in the window");
    const double d = n * stt - st * st;
    return (n * sty - st * sy) / d;
}

EntropyGrowthReport entropy_growth_comparison(const QuenchResult& model1,
                                              const QuenchResult& model2,
                                              const QuenchResult& model3, double t0,
                                              double t1) {
    EntropyGrowthReport r{};
    r.window_t0 = t0;
    r.window_t1 = t1;
    r.slope_model1 = series_slope(model1.t, model1.s_half, t0, t1);
    r.slope_model2 = series_slope(model2.t, model2.s_half, t0, t1);
    r.slope_model3 = series_slope(model3.t, model3.s_half, t0, t1);
    r.ordering_holds = r.slope_model1 < r.slope_model2 && r.slope_model2 < r.slope_model3;
    return r;
}

}  // namespace pxp1
