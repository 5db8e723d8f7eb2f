#include "pxp1/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>

#include "pxp1/linalg.hpp"

namespace pxp1 {

EigenSystem diagonalize(const SparseOperator& h, std::int64_t dense_limit, bool keep_vectors) {
    if (h.dim > dense_limit)
        throw too_large_for_full_spectrum(
            "dimension " + std::to_string(h.dim) + " exceeds the dense limit " +
            std::to_string(dense_limit) + "; reduce to a symmetry sector first");
    EigenSystem es;
    es.dim = h.dim;
    const auto n = static_cast<std::size_t>(h.dim);
    std::vector<double> a(n * n, 0.0);
    for (std::int64_t r = 0; r < h.dim; ++r)
        for (std::int64_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k)
            a[static_cast<std::size_t>(r) +
              static_cast<std::size_t>(h.col[static_cast<std::size_t>(k)]) * n] =
                h.val[static_cast<std::size_t>(k)];
    linalg::sym_eig(a, h.dim, es.energies, keep_vectors);
    if (keep_vectors)
        es.vectors = std::move(a);
    return es;
}

double magnetization(std::span<const double> vec, const ConstrainedBasis& basis) {
    if (static_cast<std::int64_t>(vec.size()) != basis.dimension())
        throw dimension_mismatch("magnetization: vector length != basis dimension");
    double m = 0.0;
    for (std::int64_t i = 0; i < basis.dimension(); ++i)
        m += vec[static_cast<std::size_t>(i)] * vec[static_cast<std::size_t>(i)] *
             basis.config(i).magnetization();
    return m;
}

double magnetization(std::span<const double> vec, const SymmetrySector& sector) {
    if (static_cast<std::int64_t>(vec.size()) != sector.dimension())
        throw dimension_mismatch("magnetization: vector length != sector dimension");
    double m = 0.0;
    for (std::int64_t v = 0; v < sector.dimension(); ++v)
        m += vec[static_cast<std::size_t>(v)] * vec[static_cast<std::size_t>(v)] *
             SpinConfig{sector.representative(v), sector.parent().length()}.magnetization();
    return m;
}

std::vector<double> sz_diagonal(const ConstrainedBasis& basis) {
    std::vector<double> d(static_cast<std::size_t>(basis.dimension()));
    for (std::int64_t i = 0; i < basis.dimension(); ++i)
        d[static_cast<std::size_t>(i)] = basis.config(i).magnetization();
    return d;
}

std::vector<double> sz_diagonal(const SymmetrySector& sector) {
    std::vector<double> d(static_cast<std::size_t>(sector.dimension()));
    for (std::int64_t v = 0; v < sector.dimension(); ++v)
        d[static_cast<std::size_t>(v)] =
            SpinConfig{sector.representative(v), sector.parent().length()}.magnetization();
    return d;
}

std::vector<double> eigenstate_diagonal_expectation(const EigenSystem& es,
                                                    std::span<const double> diag) {
    if (static_cast<std::int64_t>(diag.size()) != es.dim)
        throw dimension_mismatch("diagonal length != eigensystem dimension");
    std::vector<double> out(static_cast<std::size_t>(es.dim), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < es.dim; ++j) {
        const double* v = es.eigenvector(j);
        double acc = 0.0;
        for (std::int64_t i = 0; i < es.dim; ++i)
            acc += diag[static_cast<std::size_t>(i)] * v[i] * v[i];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

HalfCutSplitter::HalfCutSplitter(const ConstrainedBasis& basis, int cut) {
    if (cut < 1 || cut >= basis.length()) throw error("cut must be in [1, L)");
    const std::uint64_t p = pow3(cut);
    const std::int64_t dim = basis.dimension();
    left_.resize(static_cast<std::size_t>(dim));
    right_.resize(static_cast<std::size_t>(dim));
    std::vector<std::uint64_t> lcodes(static_cast<std::size_t>(dim)),
        rcodes(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) {
        lcodes[static_cast<std::size_t>(i)] = basis.code(i) % p;
        rcodes[static_cast<std::size_t>(i)] = basis.code(i) / p;
    }
    auto compress = [](const std::vector<std::uint64_t>& codes, std::vector<std::int32_t>& idx) {
        std::vector<std::uint64_t> uniq = codes;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t i = 0; i < codes.size(); ++i)
            idx[i] = static_cast<std::int32_t>(
                std::lower_bound(uniq.begin(), uniq.end(), codes[i]) - uniq.begin());
        return static_cast<std::int64_t>(uniq.size());
    };
    dim_left_ = compress(lcodes, left_);
    dim_right_ = compress(rcodes, right_);
}

namespace {

std::vector<double> schmidt_from_matrix(std::vector<double>& m, std::int64_t da,
                                        std::int64_t db) {
    // rho_A = M M^T; eigenvalues ascending from LAPACK, return descending
    std::vector<double> rho(static_cast<std::size_t>(da) * static_cast<std::size_t>(da));
    linalg::gram_rowmajor(m.data(), da, db, rho.data());
    std::vector<double> w;
    linalg::sym_eig(rho, da, w, false);
    std::reverse(w.begin(), w.end());
    for (double& x : w) x = std::max(x, 0.0);
    return w;
}

}  // namespace

std::vector<double> HalfCutSplitter::schmidt_squares(std::span<const double> amps) const {
    if (amps.size() != left_.size()) throw dimension_mismatch("schmidt_squares: wrong vector size");
    // work with the smaller half as the row space
    const bool swap = dim_left_ > dim_right_;
    const std::int64_t da = swap ? dim_right_ : dim_left_;
    const std::int64_t db = swap ? dim_left_ : dim_right_;
    const auto& rows = swap ? right_ : left_;
    const auto& cols = swap ? left_ : right_;
    std::vector<double> m(static_cast<std::size_t>(da) * static_cast<std::size_t>(db), 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i)
        m[static_cast<std::size_t>(rows[i]) * static_cast<std::size_t>(db) +
          static_cast<std::size_t>(cols[i])] = amps[i];
    return schmidt_from_matrix(m, da, db);
}

double HalfCutSplitter::entropy(std::span<const double> amps) const {
    return linalg::spectrum_entropy(schmidt_squares(amps));
}

double HalfCutSplitter::entropy(std::span<const std::complex<double>> amps) const {
    if (amps.size() != left_.size()) throw dimension_mismatch("entropy: wrong vector size");
    const bool swap = dim_left_ > dim_right_;
    const std::int64_t da = swap ? dim_right_ : dim_left_;
    const std::int64_t db = swap ? dim_left_ : dim_right_;
    const auto& rows = swap ? right_ : left_;
    const auto& cols = swap ? left_ : right_;
    std::vector<std::complex<double>> m(
        static_cast<std::size_t>(da) * static_cast<std::size_t>(db), 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i)
        m[static_cast<std::size_t>(rows[i]) * static_cast<std::size_t>(db) +
          static_cast<std::size_t>(cols[i])] = amps[i];
    std::vector<std::complex<double>> rho(
        static_cast<std::size_t>(da) * static_cast<std::size_t>(da));
    linalg::gram_rowmajor(m.data(), da, db, rho.data());
    std::vector<double> w;
    linalg::herm_eigvals(rho, da, w);
    for (double& x : w) x = std::max(x, 0.0);
    return linalg::spectrum_entropy(w);
}

std::vector<double> schmidt_squares(std::span<const std::pair<std::uint64_t, double>> amps,
                                    int length, int cut) {
    if (cut < 1 || cut >= length) throw error("cut must be in [1, L)");
    const std::uint64_t p = pow3(cut);
    std::vector<std::uint64_t> lu, ru;
    lu.reserve(amps.size());
    ru.reserve(amps.size());
    for (const auto& [code, amp] : amps) {
        (void)amp;
        lu.push_back(code % p);
        ru.push_back(code / p);
    }
    auto uniq = [](std::vector<std::uint64_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(lu);
    uniq(ru);
    const auto da = static_cast<std::int64_t>(lu.size());
    const auto db = static_cast<std::int64_t>(ru.size());
    std::vector<double> m(static_cast<std::size_t>(da) * static_cast<std::size_t>(db), 0.0);
    for (const auto& [code, amp] : amps) {
        const auto r = static_cast<std::size_t>(
            std::lower_bound(lu.begin(), lu.end(), code % p) - lu.begin());
        const auto c = static_cast<std::size_t>(
            std::lower_bound(ru.begin(), ru.end(), code / p) - ru.begin());
        m[r * static_cast<std::size_t>(db) + c] = amp;
    }
    return schmidt_from_matrix(m, da, db);
}

double entanglement_entropy(std::span<const std::pair<std::uint64_t, double>> amps, int length,
                            int cut) {
    return linalg::spectrum_entropy(schmidt_squares(amps, length, cut));
}

double entanglement_entropy(std::span<const double> vec, const ConstrainedBasis& basis,
                            int cut) {
    HalfCutSplitter splitter(basis, cut);
    return splitter.entropy(vec);
}

std::vector<GibbsPoint> gibbs_curve(const std::vector<double>& energies,
                                    const std::vector<double>& diag_expectation,
                                    std::span<const double> targets, double beta_max,
                                    double energy_tol) {
    if (energies.size() != diag_expectation.size())
        throw dimension_mismatch("gibbs_curve: spectrum/observable size mismatch");
    if (energies.empty()) throw error("gibbs_curve: empty spectrum");
    const double e_min = *std::min_element(energies.begin(), energies.end());
    const double e_max = *std::max_element(energies.begin(), energies.end());

    auto ensemble = [&](double beta, double& e_avg, double& o_avg) {
        double top = -std::numeric_limits<double>::infinity();
        for (double e : energies) top = std::max(top, -beta * e);
        double z = 0.0, se = 0.0, so = 0.0;
        for (std::size_t k = 0; k < energies.size(); ++k) {
            const double w = std::exp(-beta * energies[k] - top);
            z += w;
            se += w * energies[k];
            so += w * diag_expectation[k];
        }
        e_avg = se / z;
        o_avg = so / z;
    };

    std::vector<GibbsPoint> out;
    out.reserve(targets.size());
    for (double target : targets) {
        if (target < e_min - energy_tol || target > e_max + energy_tol)
            throw energy_out_of_range("target energy " + std::to_string(target) +
                                      " outside spectrum [" + std::to_string(e_min) + ", " +
                                      std::to_string(e_max) + "]");
        // <H>_beta decreases monotonically in beta
        double lo = -beta_max, hi = beta_max;
        double e = 0.0, o = 0.0, beta = 0.0;
        for (int it = 0; it < 200; ++it) {
            beta = 0.5 * (lo + hi);
            ensemble(beta, e, o);
            if (std::abs(e - target) <= energy_tol) break;
            if (e > target)
                lo = beta;
            else
                hi = beta;
        }
        out.push_back({target, beta, o});
    }
    return out;
}

SpecialState build_special_state(int family, int sign, int length) {
    if (sign != 1 && sign != -1) throw error("special state sign must be +-1");
    if (family != 1 && family != 2) throw error("special state family must be 1 or 2");
    if (length < 5 * family)
        throw length_too_small("the E = +-" + std::to_string(family) +
                               " family needs L >= " + std::to_string(5 * family));
    if (family == 2 && length % 2 != 0)
        throw length_too_small("the E = +-2 family needs even L");

    SpecialState s;
    s.family = family;
    s.sign = sign;
    s.length = length;
    s.energy = sign * family;

    std::map<std::uint64_t, double> acc;
    // pattern block: (L_block - 3) inert |+> sites, then |-> m |->
    auto block_code = [&](int block_len, int m_digit, int shift) {
        std::uint64_t code = 0;
        for (int i = 0; i < block_len - 3; ++i) code += 2 * pow3(i);
        // site block_len-3 and block_len-1 stay |-> (digit 0)
        code += static_cast<std::uint64_t>(m_digit) * pow3(block_len - 2);
        (void)shift;
        return code;
    };
    auto add_family = [&](std::uint64_t pattern, int translations, double weight) {
        std::uint64_t c = pattern;
        for (int n = 0; n < translations; ++n) {
            c = translate_code(c, length);
            acc[c] += weight;
        }
    };

    if (family == 1) {
        const double w[3] = {0.5, sign / std::sqrt(2.0), 0.5};  // psi_-, psi_0, psi_+
        for (int m = 0; m < 3; ++m)
            add_family(block_code(length, m, 0), length, w[m] / std::sqrt(length));
    } else {
        const int half = length / 2;
        auto pattern2 = [&](int m1, int m2) {
            return block_code(half, m1, 0) + block_code(half, m2, 0) * pow3(half);
        };
        const double sgn = sign;
        const double r8 = 1.0 / std::sqrt(8.0);
        // (m1, m2, translations, coefficient)
        struct Term { int m1, m2, tr; double coeff; };
        const Term terms[] = {
            {0, 0, half, sgn * 0.25},   // psi_--
            {2, 0, length, sgn * r8},   // psi_+-
            {2, 2, half, sgn * 0.25},   // psi_++
            {1, 0, length, 0.5},        // psi_0-
            {2, 1, length, 0.5},        // psi_+0
            {1, 1, half, sgn * 0.5},    // psi_00
        };
        for (const Term& t : terms) {
            const double norm = t.tr == length ? std::sqrt(length) : std::sqrt(length / 2.0);
            add_family(pattern2(t.m1, t.m2), t.tr, t.coeff / norm);
        }
    }

    s.amplitudes.assign(acc.begin(), acc.end());
    double norm2 = 0.0;
    for (auto& [code, amp] : s.amplitudes) norm2 += amp * amp;
    assert(std::abs(norm2 - 1.0) < 1e-12);
    return s;
}

double magnetization(const SpecialState& s) {
    double m = 0.0;
    for (const auto& [code, amp] : s.amplitudes)
        m += amp * amp * SpinConfig{code, s.length}.magnetization();
    return m;
}

double special_state_residual(const SpecialState& s) {
    const ConstraintSet model1 = ConstraintSet::preset(ModelPreset::ModelI);
    const double amp_flip = 1.0 / std::sqrt(2.0);
    std::map<std::uint64_t, double> acc;
    for (const auto& [code, amp] : s.amplitudes) {
        for_each_flip(model1, s.length, Boundary::PBC, code,
                      [&](int, int, std::uint64_t target) { acc[target] += amp * amp_flip; });
        acc[code] -= s.energy * amp;
    }
    double r2 = 0.0;
    for (const auto& [code, x] : acc) r2 += x * x;
    return std::sqrt(r2);
}

std::array<std::array<double, 3>, 3> single_site_rdm(const SpecialState& s, int site) {
    const std::uint64_t p = pow3(site);
    std::map<std::uint64_t, std::array<double, 3>> rest;
    for (const auto& [code, amp] : s.amplitudes) {
        const int d = static_cast<int>((code / p) % 3);
        const std::uint64_t key = code - static_cast<std::uint64_t>(d) * p;
        auto it = rest.try_emplace(key, std::array<double, 3>{0.0, 0.0, 0.0}).first;
        it->second[static_cast<std::size_t>(d)] += amp;
    }
    std::array<std::array<double, 3>, 3> rho{};
    for (const auto& [key, v] : rest)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) rho[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
    return rho;
}

std::vector<double> densify(const SpecialState& s, const ConstrainedBasis& basis) {
    if (basis.length() != s.length || basis.boundary() != Boundary::PBC)
        throw dimension_mismatch("densify: basis does not match the special state");
    std::vector<double> v(static_cast<std::size_t>(basis.dimension()), 0.0);
    for (const auto& [code, amp] : s.amplitudes) {
        const std::int64_t i = basis.index_of(code);
        if (i < 0) throw error("special state amplitude outside the basis");
        v[static_cast<std::size_t>(i)] = amp;
    }
    return v;
}

namespace {

std::vector<std::int64_t> degeneracy_groups(const std::vector<double>& energies, double tol) {
    std::vector<std::int64_t> g(energies.size(), 0);
    std::int64_t group = 0;
    for (std::size_t i = 1; i < energies.size(); ++i) {
        if (energies[i] - energies[i - 1] > tol) ++group;
        g[i] = group;
    }
    return g;
}

}  // namespace

std::vector<EigenReportRow> eigen_report(const EigenSystem& es, const SymmetrySector& sector,
                                         int cut, double degeneracy_tol) {
    const std::vector<double> sz = sz_diagonal(sector);
    const std::vector<double> szk = eigenstate_diagonal_expectation(es, sz);
    const std::vector<std::int64_t> groups = degeneracy_groups(es.energies, degeneracy_tol);
    HalfCutSplitter splitter(sector.parent(), cut);
    std::vector<EigenReportRow> rows(static_cast<std::size_t>(es.dim));
#pragma omp parallel
    {
        std::vector<double> full(static_cast<std::size_t>(sector.parent().dimension()));
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t j = 0; j < es.dim; ++j) {
            sector.lift(std::span<const double>(es.eigenvector(j), static_cast<std::size_t>(es.dim)),
                        full);
            rows[static_cast<std::size_t>(j)] = {j, es.energies[static_cast<std::size_t>(j)],
                                                 szk[static_cast<std::size_t>(j)],
                                                 splitter.entropy(full),
                                                 groups[static_cast<std::size_t>(j)]};
        }
    }
    return rows;
}

std::vector<EigenReportRow> eigen_report(const EigenSystem& es, const ConstrainedBasis& basis,
                                         int cut, double degeneracy_tol) {
    const std::vector<double> sz = sz_diagonal(basis);
    const std::vector<double> szk = eigenstate_diagonal_expectation(es, sz);
    const std::vector<std::int64_t> groups = degeneracy_groups(es.energies, degeneracy_tol);
    HalfCutSplitter splitter(basis, cut);
    std::vector<EigenReportRow> rows(static_cast<std::size_t>(es.dim));
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t j = 0; j < es.dim; ++j) {
        rows[static_cast<std::size_t>(j)] = {
            j, es.energies[static_cast<std::size_t>(j)], szk[static_cast<std::size_t>(j)],
            splitter.entropy(std::span<const double>(es.eigenvector(j),
                                                     static_cast<std::size_t>(es.dim))),
            groups[static_cast<std::size_t>(j)]};
    }
    return rows;
}

}  // namespace pxp1
