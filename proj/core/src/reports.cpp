#include "pxp1/reports.hpp"

#include <cstdio>
#include <ostream>

namespace pxp1 {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void export_operator(std::ostream& os, const SparseOperator& op) {
    os << "# dim=" << op.dim << " hermitian=" << (op.hermitian ? 1 : 0) << " nnz=" << op.nnz()
       << '\n';
    for (std::int64_t r = 0; r < op.dim; ++r)
        for (std::int64_t k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k)
            os << r << ' ' << op.col[static_cast<std::size_t>(k)] << ' '
               << fmt17(op.val[static_cast<std::size_t>(k)]) << '\n';
}

void export_eigen_report(std::ostream& os, const std::vector<EigenReportRow>& rows) {
    os << "index,energy,S_z,S_half,degeneracy_group\n";
    for (const auto& r : rows)
        os << r.index << ',' << fmt17(r.energy) << ',' << fmt17(r.sz) << ',' << fmt17(r.s_half)
           << ',' << r.degeneracy_group << '\n';
}

void export_gibbs_curve(std::ostream& os, const std::vector<GibbsPoint>& points) {
    os << "energy,beta,value\n";
    for (const auto& p : points)
        os << fmt17(p.energy) << ',' << fmt17(p.beta) << ',' << fmt17(p.value) << '\n';
}

void export_fsa_run(std::ostream& os, const FsaRun& run) {
    os << "n,beta_n,delta_n\n";
    for (std::size_t n = 0; n < run.beta.size(); ++n)
        os << n + 1 << ',' << fmt17(run.beta[n]) << ',' << fmt17(run.delta[n]) << '\n';
}

void export_quench_series(std::ostream& os, const QuenchResult& res) {
    os << "t,fidelity,O_avg,S_half,energy,norm\n";
    for (std::size_t i = 0; i < res.t.size(); ++i)
        os << fmt17(res.t[i]) << ',' << fmt17(res.fidelity[i]) << ',' << fmt17(res.o_avg[i])
           << ',' << fmt17(res.s_half[i]) << ',' << fmt17(res.energy[i]) << ','
           << fmt17(res.norm[i]) << '\n';
}

}  // namespace pxp1
