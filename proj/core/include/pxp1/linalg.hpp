#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pxp1::linalg {

/// Pin the BLAS backend to one thread. Parallelism in this library is
/// applied across independent outputs (rows, eigenstates) so results do
/// not depend on the worker count.
void pin_blas_single_thread();

/// Dense symmetric eigendecomposition. `a` is n x n column-major and is
/// overwritten with the eigenvectors (eigenvector j = a[j*n .. j*n+n)) when
/// `vectors` is true. Eigenvalues come back ascending in `w`.
void sym_eig(std::vector<double>& a, std::int64_t n, std::vector<double>& w, bool vectors);

/// Eigenvalues of a complex Hermitian matrix (destroys `a`).
void herm_eigvals(std::vector<std::complex<double>>& a, std::int64_t n, std::vector<double>& w);

/// Symmetric tridiagonal eigendecomposition; diag has n entries, offdiag
/// n-1. Eigenvectors (column-major) returned in z when `vectors`.
void tridiag_eig(std::vector<double> diag, std::vector<double> offdiag,
                 std::vector<double>& evals, std::vector<double>& z, bool vectors);

/// c (n x n col-major, fully written) = a * a^T where a is an n x k matrix
/// in row-major layout.
void gram_rowmajor(const double* a, std::int64_t n, std::int64_t k, double* c);

/// Same for complex, c = conj(a * a^H); only the (real) eigenvalues of the
/// result are meaningful to callers.
void gram_rowmajor(const std::complex<double>* a, std::int64_t n, std::int64_t k,
                   std::complex<double>* c);

/// Von Neumann entropy -sum p ln p over a spectrum, clamping tiny negative
/// round-off to zero.
double spectrum_entropy(const std::vector<double>& p);

}  // namespace pxp1::linalg
