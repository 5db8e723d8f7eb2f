#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pxp1/dynamics.hpp"
#include "pxp1/fsa.hpp"
#include "pxp1/hamiltonian.hpp"
#include "pxp1/spectral.hpp"

namespace pxp1 {

/// Fixed 17-significant-digit formatting; identical configs produce
/// byte-identical files.
std::string fmt17(double x);

/// Coordinate triplets `row col value` with a
/// `# dim=<d> hermitian=<0|1> nnz=<n>` header.
void export_operator(std::ostream& os, const SparseOperator& op);

/// CSV: index,energy,S_z,S_half,degeneracy_group
void export_eigen_report(std::ostream& os, const std::vector<EigenReportRow>& rows);

/// CSV: energy,beta,value
void export_gibbs_curve(std::ostream& os, const std::vector<GibbsPoint>& points);

/// CSV: n,beta_n,delta_n
void export_fsa_run(std::ostream& os, const FsaRun& run);

/// CSV: t,fidelity,O_avg,S_half,energy,norm
void export_quench_series(std::ostream& os, const QuenchResult& res);

}  // namespace pxp1
