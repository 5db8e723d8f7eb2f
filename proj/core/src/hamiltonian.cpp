#include "pxp1/hamiltonian.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace pxp1 {

void SparseOperator::apply(const double* x, double* y) const {
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        double acc = 0.0;
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[static_cast<std::size_t>(k)] * x[col[static_cast<std::size_t>(k)]];
        y[r] = acc;
    }
}

void SparseOperator::apply(const std::complex<double>* x, std::complex<double>* y) const {
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        std::complex<double> acc = 0.0;
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[static_cast<std::size_t>(k)] * x[col[static_cast<std::size_t>(k)]];
        y[r] = acc;
    }
}

std::vector<double> SparseOperator::apply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(dim), 0.0);
    apply(x.data(), y.data());
    return y;
}

double SparseOperator::max_abs_entry() const {
    double m = 0.0;
    for (double v : val) m = std::max(m, std::abs(v));
    return m;
}

SparseOperator SparseOperator::transposed() const {
    SparseOperator t;
    t.dim = dim;
    t.hermitian = hermitian;
    t.row_ptr.assign(static_cast<std::size_t>(dim) + 1, 0);
    for (std::int32_t c : col) ++t.row_ptr[static_cast<std::size_t>(c) + 1];
    for (std::int64_t r = 0; r < dim; ++r)
        t.row_ptr[static_cast<std::size_t>(r) + 1] += t.row_ptr[static_cast<std::size_t>(r)];
    t.col.resize(col.size());
    t.val.resize(val.size());
    std::vector<std::int64_t> fill(t.row_ptr.begin(), t.row_ptr.end() - 1);
    for (std::int64_t r = 0; r < dim; ++r)
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            const auto c = static_cast<std::size_t>(col[static_cast<std::size_t>(k)]);
            const auto pos = static_cast<std::size_t>(fill[c]++);
            t.col[pos] = static_cast<std::int32_t>(r);
            t.val[pos] = val[static_cast<std::size_t>(k)];
        }
    return t;
}

double SparseOperator::hermiticity_violation() const {
    SparseOperator t = transposed();
    double m = 0.0;
    // both row sets are col-sorted; walk rows in lockstep
    for (std::int64_t r = 0; r < dim; ++r) {
        std::int64_t i = row_ptr[r], j = t.row_ptr[r];
        while (i < row_ptr[r + 1] || j < t.row_ptr[r + 1]) {
            const std::int32_t ci = i < row_ptr[r + 1] ? col[static_cast<std::size_t>(i)] : INT32_MAX;
            const std::int32_t cj = j < t.row_ptr[r + 1] ? t.col[static_cast<std::size_t>(j)] : INT32_MAX;
            if (ci == cj) {
                m = std::max(m, std::abs(val[static_cast<std::size_t>(i)] - t.val[static_cast<std::size_t>(j)]));
                ++i; ++j;
            } else if (ci < cj) {
                m = std::max(m, std::abs(val[static_cast<std::size_t>(i)]));
                ++i;
            } else {
                m = std::max(m, std::abs(t.val[static_cast<std::size_t>(j)]));
                ++j;
            }
        }
    }
    return m;
}

SparseOperator SparseOperator::diagonal(const std::vector<double>& d) {
    SparseOperator op;
    op.dim = static_cast<std::int64_t>(d.size());
    op.hermitian = true;
    op.row_ptr.assign(d.size() + 1, 0);
    for (std::size_t r = 0; r < d.size(); ++r) {
        op.row_ptr[r + 1] = op.row_ptr[r];
        if (d[r] != 0.0) {
            op.col.push_back(static_cast<std::int32_t>(r));
            op.val.push_back(d[r]);
            ++op.row_ptr[r + 1];
        }
    }
    return op;
}

SparseOperator SparseOperator::identity(std::int64_t n) {
    return diagonal(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

namespace {

// one row of A*B as a sparse accumulation
void product_row(const SparseOperator& a, const SparseOperator& b, std::int64_t r,
                 std::vector<double>& scratch, std::vector<std::int32_t>& touched) {
    for (std::int64_t i = a.row_ptr[r]; i < a.row_ptr[r + 1]; ++i) {
        const auto m = static_cast<std::int64_t>(a.col[static_cast<std::size_t>(i)]);
        const double av = a.val[static_cast<std::size_t>(i)];
        for (std::int64_t j = b.row_ptr[m]; j < b.row_ptr[m + 1]; ++j) {
            const auto c = b.col[static_cast<std::size_t>(j)];
            if (scratch[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
            scratch[static_cast<std::size_t>(c)] += av * b.val[static_cast<std::size_t>(j)];
        }
    }
}

double combination_max_abs(const SparseOperator& a, const SparseOperator& b, double sign) {
    if (a.dim != b.dim) throw dimension_mismatch("operator dimensions differ");
    std::vector<double> ab(static_cast<std::size_t>(a.dim), 0.0);
    std::vector<double> ba(static_cast<std::size_t>(a.dim), 0.0);
    std::vector<std::int32_t> tab, tba;
    double m = 0.0;
    for (std::int64_t r = 0; r < a.dim; ++r) {
        tab.clear(); tba.clear();
        product_row(a, b, r, ab, tab);
        product_row(b, a, r, ba, tba);
        for (auto c : tab) m = std::max(m, std::abs(ab[static_cast<std::size_t>(c)] + sign * ba[static_cast<std::size_t>(c)]));
        for (auto c : tba)
            if (ab[static_cast<std::size_t>(c)] == 0.0)
                m = std::max(m, std::abs(sign * ba[static_cast<std::size_t>(c)]));
        for (auto c : tab) ab[static_cast<std::size_t>(c)] = 0.0;
        for (auto c : tba) ba[static_cast<std::size_t>(c)] = 0.0;
    }
    return m;
}

}  // namespace

double commutator_max_abs(const SparseOperator& a, const SparseOperator& b) {
    return combination_max_abs(a, b, -1.0);
}

double anticommutator_max_abs(const SparseOperator& a, const SparseOperator& b) {
    return combination_max_abs(a, b, +1.0);
}

SparseOperator build_hamiltonian(const ConstrainedBasis& basis) {
    if (basis.dimension() == 0) throw error("build_hamiltonian: empty basis");
    const double amp = 1.0 / std::sqrt(2.0);
    SparseOperator h;
    h.dim = basis.dimension();
    h.hermitian = true;
    h.row_ptr.assign(static_cast<std::size_t>(h.dim) + 1, 0);

    std::vector<std::int32_t> row;
    for (std::int64_t r = 0; r < h.dim; ++r) {
        row.clear();
        for_each_flip(basis, basis.code(r), [&](int, int, std::uint64_t target) {
            const std::int64_t idx = basis.index_of(target);
            assert(idx >= 0);
            row.push_back(static_cast<std::int32_t>(idx));
        });
        std::sort(row.begin(), row.end());
        for (auto c : row) {
            h.col.push_back(c);
            h.val.push_back(amp);
        }
        h.row_ptr[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(h.col.size());
    }
    return h;
}

int count_motif(std::uint64_t code, int length, Boundary bc, std::string_view motif) {
    const int m = static_cast<int>(motif.size());
    if (m == 0 || m > length) return 0;
    int digits[64];
    for (int i = 0; i < length; ++i) {
        digits[i] = static_cast<int>(code % 3);
        code /= 3;
    }
    int want[64];
    for (int i = 0; i < m; ++i) want[i] = digit_from_char(motif[static_cast<std::size_t>(i)]);
    const int starts = bc == Boundary::PBC ? length : length - m + 1;
    int count = 0;
    for (int p = 0; p < starts; ++p) {
        bool match = true;
        for (int i = 0; i < m && match; ++i)
            match = digits[(p + i) % length] == want[i];
        count += match;
    }
    return count;
}

SparseOperator conserved_Npp(const ConstrainedBasis& basis) {
    return motif_projector(basis, "++");
}

SparseOperator motif_projector(const ConstrainedBasis& basis, std::string_view motif) {
    std::vector<double> d(static_cast<std::size_t>(basis.dimension()));
    for (std::int64_t i = 0; i < basis.dimension(); ++i)
        d[static_cast<std::size_t>(i)] =
            count_motif(basis.code(i), basis.length(), basis.boundary(), motif);
    return SparseOperator::diagonal(d);
}

SparseOperator conserved_Oi(const ConstrainedBasis& basis, int site, bool allow_projection) {
    if (site < 0 || site >= basis.length()) throw error("conserved_Oi: site out of range");
    const std::uint64_t p3 = pow3(site);
    SparseOperator op;
    op.dim = basis.dimension();
    op.hermitian = true;
    op.row_ptr.assign(static_cast<std::size_t>(op.dim) + 1, 0);
    for (std::int64_t r = 0; r < op.dim; ++r) {
        const std::uint64_t code = basis.code(r);
        const int d = static_cast<int>((code / p3) % 3);
        if (d == 1) {
            op.col.push_back(static_cast<std::int32_t>(r));
            op.val.push_back(1.0);
        } else {
            const std::uint64_t swapped = d == 0 ? code + 2 * p3 : code - 2 * p3;
            const std::int64_t idx = basis.index_of(swapped);
            if (idx < 0) {
                if (!allow_projection)
                    throw flip_leaves_basis("O_" + std::to_string(site) + " swap leaves the basis at state " +
                                            basis.config(r).to_string());
            } else {
                op.col.push_back(static_cast<std::int32_t>(idx));
                op.val.push_back(1.0);
            }
        }
        op.row_ptr[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(op.col.size());
    }
    return op;
}

}  // namespace pxp1
