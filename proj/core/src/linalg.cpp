#include "pxp1/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

extern "C" {
// Fortran BLAS; resolved from OpenBLAS (or any reference BLAS).
void dsyrk_(const char* uplo, const char* trans, const int* n, const int* k,
            const double* alpha, const double* a, const int* lda, const double* beta,
            double* c, const int* ldc);
void zherk_(const char* uplo, const char* trans, const int* n, const int* k,
            const double* alpha, const void* a, const int* lda, const double* beta,
            void* c, const int* ldc);
// Present only when the BLAS is OpenBLAS.
void openblas_set_num_threads(int) __attribute__((weak));
}

namespace pxp1::linalg {

void pin_blas_single_thread() {
    if (openblas_set_num_threads) openblas_set_num_threads(1);
}

namespace {
void check_info(lapack_int info, const char* what) {
    if (info != 0)
        throw std::runtime_error(std::string(what) + " failed, info=" + std::to_string(info));
}
}  // namespace

void sym_eig(std::vector<double>& a, std::int64_t n, std::vector<double>& w, bool vectors) {
    w.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return;
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L',
                                     static_cast<lapack_int>(n), a.data(),
                                     static_cast<lapack_int>(n), w.data());
    check_info(info, "dsyevd");
}

void herm_eigvals(std::vector<std::complex<double>>& a, std::int64_t n, std::vector<double>& w) {
    w.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return;
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(n),
                                     reinterpret_cast<lapack_complex_double*>(a.data()),
                                     static_cast<lapack_int>(n), w.data());
    check_info(info, "zheevd");
}

void tridiag_eig(std::vector<double> diag, std::vector<double> offdiag,
                 std::vector<double>& evals, std::vector<double>& z, bool vectors) {
    const auto n = static_cast<lapack_int>(diag.size());
    if (vectors) z.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    if (n == 0) { evals.clear(); return; }
    if (offdiag.size() + 1 != diag.size()) offdiag.resize(diag.size() - 1, 0.0);
    lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', n, diag.data(),
                                    offdiag.data(), vectors ? z.data() : nullptr, n);
    check_info(info, "dstev");
    evals = std::move(diag);
}

void gram_rowmajor(const double* a, std::int64_t n, std::int64_t k, double* c) {
    // row-major n x k == column-major k x n, so A^T(fortran) * A(fortran).
    const int ni = static_cast<int>(n), ki = static_cast<int>(k);
    const double one = 1.0, zero = 0.0;
    dsyrk_("L", "T", &ni, &ki, &one, a, &ki, &zero, c, &ni);
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < j; ++i) c[i + j * n] = c[j + i * n];
}

void gram_rowmajor(const std::complex<double>* a, std::int64_t n, std::int64_t k,
                   std::complex<double>* c) {
    const int ni = static_cast<int>(n), ki = static_cast<int>(k);
    const double one = 1.0, zero = 0.0;
    zherk_("L", "C", &ni, &ki, &one, a, &ki, &zero, c, &ni);
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < j; ++i) c[i + j * n] = std::conj(c[j + i * n]);
}

double spectrum_entropy(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s -= x * std::log(x);
    return s;
}

}  // namespace pxp1::linalg
