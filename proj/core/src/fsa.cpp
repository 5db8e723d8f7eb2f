#include "pxp1/fsa.hpp"

#include <algorithm>
#include <cmath>

#include "pxp1/linalg.hpp"

namespace pxp1 {

std::uint64_t z2_code(int length, int plus_parity) {
    std::uint64_t code = 0;
    for (int i = 0; i < length; ++i)
        if (i % 2 == plus_parity) code += 2 * pow3(i);
    return code;
}

HamiltonianSplit split_hamiltonian(const SparseOperator& h, const ConstrainedBasis& basis,
                                   int z2_plus_parity) {
    if (basis.length() % 2 != 0) throw error("split_hamiltonian requires even L");
    if (h.dim != basis.dimension())
        throw dimension_mismatch("split_hamiltonian: operator/basis dimension mismatch");
    HamiltonianSplit split;
    split.z2_plus_parity = z2_plus_parity;
    split.z2_index = basis.index_of(z2_code(basis.length(), z2_plus_parity));
    split.z2bar_index = basis.index_of(z2_code(basis.length(), 1 - z2_plus_parity));
    if (split.z2_index < 0 || split.z2bar_index < 0)
        throw z2_not_in_basis("|Z2> is not in this constrained basis");

    // Partition the entries of H: an entry (u -> v) changes exactly one
    // digit; it belongs to H+ when it raises m on the |->-sublattice
    // (opposite parity to z2_plus_parity) or lowers m on the
    // |+>-sublattice.
    SparseOperator plus;
    plus.dim = h.dim;
    plus.hermitian = false;
    plus.row_ptr.assign(static_cast<std::size_t>(h.dim) + 1, 0);
    const int length = basis.length();
    for (std::int64_t r = 0; r < h.dim; ++r) {
        const std::uint64_t cu = basis.code(r);
        for (std::int64_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k) {
            const auto c = h.col[static_cast<std::size_t>(k)];
            const std::uint64_t cv = basis.code(c);
            // identify the flipped site and direction from the code difference
            int site = 0;
            {
                std::uint64_t a = cu, b = cv;
                while (a % 3 == b % 3) {
                    a /= 3;
                    b /= 3;
                    ++site;
                }
            }
            if (site >= length) throw error("split_hamiltonian: entry does not flip a site");
            // entry (row r, col c) maps state c to state r: digit from -> to
            const int to = static_cast<int>((cu / pow3(site)) % 3);
            const int from = static_cast<int>((cv / pow3(site)) % 3);
            const bool raises = to > from;
            const bool on_plus_sublattice = site % 2 == z2_plus_parity;
            if (on_plus_sublattice != raises) {  // lower on +, raise on -
                plus.col.push_back(c);
                plus.val.push_back(h.val[static_cast<std::size_t>(k)]);
            }
        }
        plus.row_ptr[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(plus.col.size());
    }
    split.minus = plus.transposed();
    split.plus = std::move(plus);
    return split;
}

FsaRun forward_scatter(const HamiltonianSplit& split, const ConstrainedBasis& basis,
                       bool keep_vectors, DeltaConvention convention, double zero_tol) {
    const int length = basis.length();
    const int steps = 2 * length;
    const auto dim = static_cast<std::size_t>(basis.dimension());

    FsaRun run;
    run.length = length;
    run.convention = convention;
    run.beta.reserve(static_cast<std::size_t>(steps));
    run.delta.reserve(static_cast<std::size_t>(steps));

    std::vector<double> prev(dim, 0.0), cur(dim, 0.0), next(dim, 0.0), back(dim, 0.0);
    cur[static_cast<std::size_t>(split.z2_index)] = 1.0;
    if (keep_vectors) run.vectors.push_back(cur);

    for (int n = 1; n <= steps; ++n) {
        split.plus.apply(cur.data(), next.data());
        double b2 = 0.0;
        for (double x : next) b2 += x * x;
        const double b = std::sqrt(b2);
        if (b <= zero_tol)
            throw premature_annihilation("H+ annihilated the FSA vector at step " +
                                         std::to_string(n) + " of " + std::to_string(steps));
        const double inv = 1.0 / b;
        for (double& x : next) x *= inv;
        run.beta.push_back(b);

        // delta_n = ||H- v_n - beta_n v_{n-1}|| (squared by default)
        split.minus.apply(next.data(), back.data());
        double mismatch2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = back[i] - b * cur[i];
            mismatch2 += d * d;
        }
        run.delta.push_back(convention == DeltaConvention::SquaredNorm ? mismatch2
                                                                       : std::sqrt(mismatch2));
        prev.swap(cur);
        cur.swap(next);
        if (keep_vectors) run.vectors.push_back(cur);
    }

    // the iteration terminates: H+ |v_2L> = 0
    split.plus.apply(cur.data(), next.data());
    double tail = 0.0;
    for (double x : next) tail += x * x;
    if (std::sqrt(tail) > zero_tol)
        throw premature_annihilation("H+ |v_2L> is not zero; split or basis is inconsistent");

    for (std::size_t n = 0; n < run.delta.size(); ++n) {
        run.delta_total += run.delta[n];
        if (run.first_error_index < 0 && run.delta[n] > zero_tol)
            run.first_error_index = static_cast<int>(n) + 1;
    }
    return run;
}

int analytic_first_error_step(ModelPreset model) {
    switch (model) {
        case ModelPreset::ModelI: return 5;
        case ModelPreset::ModelII: return 3;
        case ModelPreset::ModelIII: return 2;
        default: throw unsupported_model("no closed-form FSA error for this model");
    }
}

double analytic_first_error(ModelPreset model, int length) {
    const double L = length;
    switch (model) {
        case ModelPreset::ModelI: {
            const double num = 12.0 * (L * L * L - 6.0 * L * L + 11.0 * L - 18.0);
            const double den = (L - 1.0) * (L - 2.0) * (L - 3.0) *
                               (5.0 * L * L * L * L - 50.0 * L * L * L + 175.0 * L * L -
                                250.0 * L + 144.0);
            return num / den;
        }
        case ModelPreset::ModelII:
            return 50.0 * (2.0 * L - 9.0) / ((2.0 * L - 5.0) * (6.0 * L * L - 45.0 * L + 95.0));
        case ModelPreset::ModelIII:
            return 1.0 / (4.0 * (4.0 * L - 11.0));
        default:
            throw unsupported_model("no closed-form FSA error for this model");
    }
}

std::vector<FsaOverlap> fsa_spectrum_and_overlap(const FsaRun& run,
                                                 const ConstrainedBasis& basis) {
    if (run.vectors.empty())
        throw vectors_not_retained("forward_scatter must be run with keep_vectors");
    const auto m = static_cast<std::int64_t>(run.vectors.size());  // 2L + 1
    std::vector<double> diag(static_cast<std::size_t>(m), 0.0);
    std::vector<double> evals, z;
    linalg::tridiag_eig(diag, run.beta, evals, z, true);

    std::vector<FsaOverlap> out;
    out.reserve(static_cast<std::size_t>(m));
    std::vector<double> lifted(static_cast<std::size_t>(basis.dimension()));
    // v_0 = |Z2>: its single support index is where the Z2 overlap is read
    std::int64_t z2_index = -1;
    for (std::size_t i = 0; i < run.vectors.front().size(); ++i)
        if (run.vectors.front()[i] != 0.0) {
            z2_index = static_cast<std::int64_t>(i);
            break;
        }
    for (std::int64_t k = 0; k < m; ++k) {
        std::fill(lifted.begin(), lifted.end(), 0.0);
        for (std::int64_t n = 0; n < m; ++n) {
            const double c = z[static_cast<std::size_t>(n + k * m)];
            if (c == 0.0) continue;
            const auto& vn = run.vectors[static_cast<std::size_t>(n)];
            for (std::size_t i = 0; i < lifted.size(); ++i) lifted[i] += c * vn[i];
        }
        const double ovl = lifted[static_cast<std::size_t>(z2_index)];
        out.push_back({evals[static_cast<std::size_t>(k)], ovl * ovl});
    }
    return out;
}

}  // namespace pxp1
