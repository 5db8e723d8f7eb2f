// Acceptance suite: each criterion prints one PASS/FAIL line; the binary
// exits nonzero if any requested criterion fails. Run with a criterion
// number (1..9) or no argument for all.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "pxp1/dynamics.hpp"
#include "pxp1/fragmentation.hpp"
#include "pxp1/fsa.hpp"
#include "pxp1/linalg.hpp"
#include "pxp1/reports.hpp"
#include "pxp1/spectral.hpp"
#include "pxp1/symmetry.hpp"
#include "support/oracles.hpp"

using namespace pxp1;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
    int failures = 0;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::cout << "    FAILED: " << what << '\n';
        }
    }
};

ConstrainedBasis make(ModelPreset m, int L, Boundary bc = Boundary::PBC) {
    return ConstrainedBasis::enumerate(ConstraintSet::preset(m), L, bc);
}

double wall_seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

bool criterion1() {
    Checker ck;
    const auto t0 = Clock::now();
    for (int L = 1; L <= 20; ++L) {
        ck.require(count_dimension(ConstraintSet::preset(ModelPreset::ModelII), L, Boundary::OBC) ==
                       static_cast<std::uint64_t>(std::llround(closed_form_dimension(ModelPreset::ModelII, L))),
                   "Model-II closed form at L=" + std::to_string(L));
        ck.require(count_dimension(ConstraintSet::preset(ModelPreset::ModelIII), L, Boundary::OBC) ==
                       static_cast<std::uint64_t>(std::llround(closed_form_dimension(ModelPreset::ModelIII, L))),
                   "Model-III closed form at L=" + std::to_string(L));
    }
    for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelII, ModelPreset::ModelIII}) {
        for (Boundary bc : {Boundary::OBC, Boundary::PBC}) {
            for (int L = 1; L <= 12; ++L) {
                auto basis = ConstrainedBasis::enumerate(ConstraintSet::preset(m), L, bc);
                auto brute = oracle::brute_force_codes(ConstraintSet::preset(m), L, bc);
                bool same = basis.dimension() == static_cast<std::int64_t>(brute.size());
                for (std::int64_t i = 0; same && i < basis.dimension(); ++i)
                    same = basis.code(i) == brute[static_cast<std::size_t>(i)];
                ck.require(same, std::string("enumeration vs brute force, model ") +
                                     std::string(to_string(m)) + " L=" + std::to_string(L));
            }
        }
    }
    const double sec = wall_seconds(t0);
    ck.require(sec < 10.0, "runtime " + std::to_string(sec) + " s exceeds 10 s");
    return ck.failures == 0;
}

bool criterion2() {
    Checker ck;
    const auto t0 = Clock::now();
    for (Boundary bc : {Boundary::OBC, Boundary::PBC}) {
        std::vector<std::uint64_t> counts(21, 0);
        for (int L = 1; L <= 16; ++L)
            counts[static_cast<std::size_t>(L)] =
                enumerate_inert(ConstraintSet::preset(ModelPreset::ModelI), L, bc).count;
        for (int L = 5; L <= 16; ++L) {
            const char* tag = bc == Boundary::OBC ? " (OBC)" : " (PBC)";
            // the L-4 seed of the L=5 PBC recurrence is the degenerate
            // one-site ring (self-adjacent bond); use the formal
            // closed-form seed there, enumerated counts everywhere else
            const std::uint64_t i4 = bc == Boundary::PBC && L == 5
                                         ? inert_count_closed_form(1, bc)
                                         : counts[static_cast<std::size_t>(L) - 4];
            ck.require(counts[static_cast<std::size_t>(L)] ==
                           counts[static_cast<std::size_t>(L) - 1] +
                               counts[static_cast<std::size_t>(L) - 3] + i4,
                       "inert recurrence at L=" + std::to_string(L) + tag);
            ck.require(counts[static_cast<std::size_t>(L)] == inert_count_closed_form(L, bc),
                       "inert closed form at L=" + std::to_string(L) + tag);
        }
    }
    const double ratio = static_cast<double>(inert_count_closed_form(24, Boundary::OBC)) /
                         static_cast<double>(inert_count_closed_form(24, Boundary::PBC));
    ck.require(std::abs(ratio - 0.523) <= 0.02 * 0.523,
               "OBC/PBC inert ratio " + std::to_string(ratio));
    const double sec = wall_seconds(t0);
    ck.require(sec < 60.0, "runtime " + std::to_string(sec) + " s exceeds 60 s");
    return ck.failures == 0;
}

bool criterion3() {
    Checker ck;
    std::int64_t prev_count = 0;
    for (int L : {6, 8, 10, 12, 14}) {
        auto basis = make(ModelPreset::ModelI, L);
        auto frags = decompose(build_hamiltonian(basis));
        ck.require(frags.count() > prev_count,
                   "fragment count not increasing at L=" + std::to_string(L));
        prev_count = frags.count();

        std::int64_t npp0_fragments = 0, npp0_size = 0;
        for (const auto& comp : frags.components) {
            auto [value, constant] = component_motif_label(basis, comp, "++");
            ck.require(constant, "N_++ not constant on a fragment at L=" + std::to_string(L));
            if (value == 0) {
                ++npp0_fragments;
                npp0_size = static_cast<std::int64_t>(comp.size());
            }
        }
        ck.require(npp0_fragments == 1, "N_++=0 fragment not unique at L=" + std::to_string(L));
        ck.require(npp0_size == static_cast<std::int64_t>(count_dimension(
                                    ConstraintSet::preset(ModelPreset::PxpSpin1), L, Boundary::PBC)),
                   "N_++=0 fragment is not the spin-1 PXP space at L=" + std::to_string(L));

        if (L == 10) {
            // the paper counts subsectors in the K=0, I=+1 sector, where
            // translation/reflection copies of a fragment merge
            auto sector = SymmetrySector::build(basis, 0, +1);
            auto sfrags = decompose(build_sector_hamiltonian(sector));
            std::set<std::pair<int, int>> labels;
            int n22 = 0;
            for (const auto& comp : sfrags.components) {
                if (component_motif_label(sector, comp, "++").first != 2) continue;
                if (component_motif_label(sector, comp, "+++").first != 0) continue;
                ++n22;
                labels.insert({component_motif_label(sector, comp, "++-++").first,
                               component_motif_label(sector, comp, "++--++").first});
            }
            ck.require(n22 == 3, "expected 3 sector fragments with (N_++=2, N_+++=0), got " +
                                     std::to_string(n22));
            ck.require(labels == std::set<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}},
                       "fragment labels (N_++-++, N_++--++) differ from {(0,0),(0,1),(1,0)}");
        }
    }
    for (int L = 2; L <= 12; ++L) {
        auto basis = make(ModelPreset::ModelIII, L);
        ck.require(decompose(build_hamiltonian(basis)).count() == 1,
                   "Model-III fragments at L=" + std::to_string(L));
    }
    return ck.failures == 0;
}

bool criterion4() {
    Checker ck;
    for (int L : {6, 8, 10, 12}) {
        auto basis = make(ModelPreset::ModelII, L);
        auto h = build_hamiltonian(basis);
        for (int i = 0; i < L; ++i)
            ck.require(commutator_max_abs(conserved_Oi(basis, i), h) == 0.0,
                       "[O_i, H^II] != 0 at L=" + std::to_string(L) + " i=" + std::to_string(i));
    }
    for (int L : {6, 8, 10, 12}) {
        auto basis = make(ModelPreset::ModelI, L);
        ck.require(commutator_max_abs(conserved_Npp(basis), build_hamiltonian(basis)) == 0.0,
                   "[N_++, H^I] != 0 at L=" + std::to_string(L));
    }
    for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelII, ModelPreset::ModelIII}) {
        for (int L = 4; L <= 10; ++L) {
            auto basis = make(m, L);
            ck.require(verify_anticommutation(build_hamiltonian(basis), basis) == 0.0,
                       std::string("CHC != -H for model ") + std::string(to_string(m)) +
                           " L=" + std::to_string(L));
        }
        auto obc = ConstrainedBasis::enumerate(ConstraintSet::preset(m), 8, Boundary::OBC);
        ck.require(verify_anticommutation(build_hamiltonian(obc), obc) == 0.0,
                   std::string("CHC != -H (OBC) for model ") + std::string(to_string(m)));
    }
    auto check_spectrum = [&](ModelPreset m, int L) {
        auto es = diagonalize(build_hamiltonian(make(m, L)), 20000, false);
        const std::size_t n = es.energies.size();
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(es.energies[i] + es.energies[n - 1 - i]));
        ck.require(worst <= 1e-10, std::string("spectrum not +-E symmetric, model ") +
                                       std::string(to_string(m)) + " L=" + std::to_string(L) +
                                       " worst=" + fmt17(worst));
    };
    check_spectrum(ModelPreset::ModelI, 10);
    check_spectrum(ModelPreset::ModelII, 8);
    check_spectrum(ModelPreset::ModelIII, 9);
    return ck.failures == 0;
}

bool criterion5() {
    Checker ck;
    for (int L : {6, 8, 10}) {
        auto basis = make(ModelPreset::ModelII, L);
        auto h = build_hamiltonian(basis);
        auto sector = sector_decomposition_model2(basis, std::vector<int>(static_cast<std::size_t>(L), 1));
        auto pxp = oracle::spin_half_pxp(L, Boundary::PBC);
        ck.require(sector.dimension() == static_cast<std::int64_t>(pxp.configs.size()),
                   "all-(+1) block dimension at L=" + std::to_string(L));
        auto hsub = dense_subspace_matrix(h, sector.vectors);
        std::vector<double> w1, w2;
        linalg::sym_eig(hsub, sector.dimension(), w1, false);
        auto href = pxp.h;
        linalg::sym_eig(href, static_cast<std::int64_t>(pxp.configs.size()), w2, false);
        double worst = 0.0;
        for (std::size_t i = 0; i < w1.size(); ++i)
            worst = std::max(worst, std::abs(w1[i] - w2[i]));
        ck.require(worst <= 1e-10,
                   "all-(+1) block spectrum vs spin-1/2 PXP at L=" + std::to_string(L) +
                       " worst=" + fmt17(worst));

        auto minus = sector_decomposition_model2(basis, std::vector<int>(static_cast<std::size_t>(L), -1));
        ck.require(minus.dimension() == 1, "all-(-1) block dimension at L=" + std::to_string(L));
        auto h0 = dense_subspace_matrix(h, minus.vectors);
        ck.require(std::abs(h0[0]) <= 1e-12,
                   "all-(-1) block energy " + fmt17(h0[0]) + " at L=" + std::to_string(L));
    }
    return ck.failures == 0;
}

bool criterion6() {
    Checker ck;
    auto check_n1 = [&](int L) {
        for (int sign : {+1, -1}) {
            auto s = build_special_state(1, sign, L);
            const std::string tag = " (n=1, sign=" + std::to_string(sign) + ", L=" + std::to_string(L) + ")";
            ck.require(special_state_residual(s) < 1e-12, "residual" + tag);
            ck.require(std::abs(magnetization(s) - (L - 5)) <= 1e-10, "S_z" + tag);
            auto sq = schmidt_squares(s.amplitudes, L, L / 2);
            const double big = (L - 4.0) / (2.0 * L), small = 1.0 / L;
            bool ok = sq.size() >= 6 && std::abs(sq[0] - big) <= 1e-10 &&
                      std::abs(sq[1] - big) <= 1e-10;
            for (int k = 2; k < 6; ++k) ok = ok && std::abs(sq[static_cast<std::size_t>(k)] - small) <= 1e-10;
            for (std::size_t k = 6; k < sq.size(); ++k) ok = ok && sq[k] <= 1e-12;
            ck.require(ok, "Schmidt spectrum" + tag);
            auto rho = single_site_rdm(s);
            const double off = 1.0 / (2.0 * std::sqrt(2.0) * L);
            const double expect[3][3] = {{9.0 / (4.0 * L), off, 1.0 / (4.0 * L)},
                                         {off, 1.0 / (2.0 * L), off},
                                         {1.0 / (4.0 * L), off, 1.0 - 11.0 / (4.0 * L)}};
            double worst = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    worst = std::max(worst, std::abs(std::abs(rho[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) -
                                                     std::abs(expect[a][b])));
            // paper states the entries for the +1 member; signs of the
            // off-diagonals flip with the psi_0 coefficient for -1
            if (sign == +1)
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        worst = std::max(worst, std::abs(rho[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                                                         expect[a][b]));
            ck.require(worst <= 1e-10, "single-site RDM" + tag);
        }
    };
    auto check_n2 = [&](int L) {
        for (int sign : {+1, -1}) {
            auto s = build_special_state(2, sign, L);
            const std::string tag = " (n=2, sign=" + std::to_string(sign) + ", L=" + std::to_string(L) + ")";
            ck.require(special_state_residual(s) < 1e-12, "residual" + tag);
            ck.require(std::abs(magnetization(s) - (L - 10)) <= 1e-10, "S_z" + tag);
            ck.require(std::abs(entanglement_entropy(s.amplitudes, L, L / 2) -
                                (std::log(L) - std::log(2.0))) <= 1e-10,
                       "entropy ln L - ln 2" + tag);
        }
    };
    for (int L : {8, 12, 16}) check_n1(L);
    for (int L : {12, 16}) check_n2(L);
    return ck.failures == 0;
}

bool criterion7() {
    Checker ck;
    double totals_at_12[3] = {0.0, 0.0, 0.0};
    for (int L : {8, 10, 12, 14}) {
        int mi = 0;
        for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelII, ModelPreset::ModelIII}) {
            auto basis = make(m, L);
            auto h = build_hamiltonian(basis);
            auto split = split_hamiltonian(h, basis);
            auto run = forward_scatter(split, basis);
            const std::string tag = std::string(" (model ") + std::string(to_string(m)) +
                                    ", L=" + std::to_string(L) + ")";
            const int nf = analytic_first_error_step(m);
            ck.require(run.first_error_index == nf,
                       "n_f=" + std::to_string(run.first_error_index) + tag);
            for (int n = 1; n < nf; ++n)
                ck.require(run.delta[static_cast<std::size_t>(n) - 1] < 1e-12,
                           "delta_" + std::to_string(n) + " not zero" + tag);
            ck.require(std::abs(run.delta[static_cast<std::size_t>(nf) - 1] -
                                analytic_first_error(m, L)) <= 1e-10,
                       "delta_nf vs closed form" + tag);
            const double b1sq_expected = m == ModelPreset::ModelI ? L / 4.0 : L / 2.0;
            ck.require(std::abs(run.beta[0] * run.beta[0] - b1sq_expected) <= 1e-13,
                       "beta_1^2" + tag);
            if (L == 12) totals_at_12[mi] = run.delta_total;
            ++mi;
        }
    }
    ck.require(totals_at_12[0] < totals_at_12[1] && totals_at_12[1] < totals_at_12[2],
               "total FSA error ordering at L=12: " + fmt17(totals_at_12[0]) + ", " +
                   fmt17(totals_at_12[1]) + ", " + fmt17(totals_at_12[2]));
    for (int L : {8, 10}) {
        auto basis = make(ModelPreset::Free, L);
        auto run = forward_scatter(split_hamiltonian(build_hamiltonian(basis), basis), basis);
        for (double d : run.delta)
            ck.require(d < 1e-12, "free-model delta at L=" + std::to_string(L));
    }
    return ck.failures == 0;
}

bool criterion8() {
    Checker ck;
    const auto t0 = Clock::now();
    const int L = 12;
    QuenchParams p;
    p.t_max = 30.0;
    p.dt = 0.05;

    auto run_model = [&](ModelPreset m) {
        auto basis = make(m, L);
        auto h = build_hamiltonian(basis);
        return evolve_z2(h, basis, p);
    };
    QuenchResult r1 = run_model(ModelPreset::ModelI);
    QuenchResult r2 = run_model(ModelPreset::ModelII);
    QuenchResult r3 = run_model(ModelPreset::ModelIII);
    QuenchResult rp = run_model(ModelPreset::PxpSpin1);

    int mi = 0;
    for (const QuenchResult* r : {&r1, &r2, &r3}) {
        const std::string tag = " (model " + std::to_string(mi + 1) + ")";
        double worst_norm = 0.0, worst_energy = 0.0;
        for (std::size_t i = 0; i < r->t.size(); ++i) {
            worst_norm = std::max(worst_norm, std::abs(r->norm[i] - 1.0));
            worst_energy = std::max(worst_energy, std::abs(r->energy[i] - r->energy[0]));
        }
        ck.require(worst_norm <= 1e-10, "norm drift " + fmt17(worst_norm) + tag);
        ck.require(worst_energy <= 1e-10, "energy drift " + fmt17(worst_energy) + tag);
        ++mi;
    }

    double worst_series = 0.0;
    for (std::size_t i = 0; i < r1.t.size(); ++i) {
        worst_series = std::max(worst_series, std::abs(r1.fidelity[i] - rp.fidelity[i]));
        worst_series = std::max(worst_series, std::abs(r1.o_avg[i] - rp.o_avg[i]));
        worst_series = std::max(worst_series, std::abs(r1.s_half[i] - rp.s_half[i]));
        worst_series = std::max(worst_series, std::abs(r1.energy[i] - rp.energy[i]));
    }
    ck.require(worst_series <= 1e-10,
               "Model-I vs standalone spin-1 PXP series, worst " + fmt17(worst_series));

    auto basis2 = make(ModelPreset::ModelII, L);
    auto weights = z2_sector_weights_model2(basis2);
    ck.require(weights.size() == 4096, "sector weight count");
    const double expect = std::ldexp(1.0, -L);
    bool all_equal = true;
    for (const auto& [name, w] : weights) all_equal = all_equal && w == expect;
    ck.require(all_equal, "sector weights all exactly 2^-12");

    auto rep = entropy_growth_comparison(r1, r2, r3);
    ck.require(rep.ordering_holds, "entropy growth slope ordering I < II < III: " +
                                       fmt17(rep.slope_model1) + ", " + fmt17(rep.slope_model2) +
                                       ", " + fmt17(rep.slope_model3));

    double late2 = 0.0, late3 = 0.0;
    for (std::size_t i = 0; i < r2.t.size(); ++i) {
        if (r2.t[i] < 20.0 || r2.t[i] > 30.0) continue;
        late2 = std::max(late2, r2.fidelity[i]);
        late3 = std::max(late3, r3.fidelity[i]);
    }
    ck.require(late3 < late2, "late-window fidelity: Model-III " + fmt17(late3) +
                                  " vs Model-II " + fmt17(late2));

    const double sec = wall_seconds(t0);
    ck.require(sec < 300.0, "runtime " + std::to_string(sec) + " s exceeds 5 min");
    std::cout << "    (dynamics wall time " << sec << " s)\n";
    return ck.failures == 0;
}

bool criterion9() {
    Checker ck;
    std::filesystem::create_directories("acceptance_out");

    // Model-I, L=16, K=0, I=+1
    {
        auto basis = make(ModelPreset::ModelI, 16);
        auto sector = SymmetrySector::build(basis, 0, +1);
        // cross-check the orbit construction against a Burnside count
        std::int64_t fixed = 0;
        for (int j = 0; j < 16; ++j) {
            fixed += oracle::count_fixed(basis, j, false);
            fixed += oracle::count_fixed(basis, j, true);
        }
        ck.require(fixed % 32 == 0 && sector.dimension() == fixed / 32,
                   "sector dimension vs Burnside count");
        auto hs = build_sector_hamiltonian(sector);
        auto es = diagonalize(hs, 20000, true);
        auto rows = eigen_report(es, sector, 8);
        {
            std::ofstream os("acceptance_out/eigenreport_model1_L16_k0_ip1.csv");
            export_eigen_report(os, rows);
        }
        auto sz = eigenstate_diagonal_expectation(es, sz_diagonal(sector));
        std::vector<double> targets;
        const double emin = es.energies.front(), emax = es.energies.back();
        for (int i = 0; i <= 160; ++i)
            targets.push_back(emin + (emax - emin) * i / 160.0);
        targets.push_back(-2.0);
        targets.push_back(-1.0);
        targets.push_back(1.0);
        targets.push_back(2.0);
        auto curve = gibbs_curve(es.energies, sz, targets);
        {
            std::ofstream os("acceptance_out/gibbs_model1_L16_k0_ip1.csv");
            export_gibbs_curve(os, curve);
        }
        const double at_m2 = curve[curve.size() - 4].value;
        const double at_m1 = curve[curve.size() - 3].value;
        const double at_p1 = curve[curve.size() - 2].value;
        const double at_p2 = curve[curve.size() - 1].value;
        for (int sign : {+1, -1}) {
            auto s1 = build_special_state(1, sign, 16);
            auto s2 = build_special_state(2, sign, 16);
            const double gibbs1 = sign > 0 ? at_p1 : at_m1;
            const double gibbs2 = sign > 0 ? at_p2 : at_m2;
            ck.require(magnetization(s1) - gibbs1 > 0.0,
                       "n=1 special state above the Gibbs curve (sign " + std::to_string(sign) + ")");
            ck.require(magnetization(s2) - gibbs2 > 0.0,
                       "n=2 special state above the Gibbs curve (sign " + std::to_string(sign) + ")");
        }
        // the special states really appear in this sector's spectrum
        for (double e : {1.0, 2.0}) {
            bool found = false;
            for (double x : es.energies) found = found || std::abs(x - e) <= 1e-10;
            ck.require(found, "integer eigenvalue " + fmt17(e) + " present in the sector");
        }
    }

    // Model-III, L=14, K=0, I=+1
    {
        auto basis = make(ModelPreset::ModelIII, 14);
        auto sector = SymmetrySector::build(basis, 0, +1);
        auto hs = build_sector_hamiltonian(sector);
        auto es = diagonalize(hs, 20000, true);
        auto rows = eigen_report(es, sector, 7);
        {
            std::ofstream os("acceptance_out/eigenreport_model3_L14_k0_ip1.csv");
            export_eigen_report(os, rows);
        }
        auto sz = eigenstate_diagonal_expectation(es, sz_diagonal(sector));
        std::vector<double> targets;
        const double emin = es.energies.front(), emax = es.energies.back();
        for (int i = 0; i <= 160; ++i)
            targets.push_back(emin + (emax - emin) * i / 160.0);
        auto curve = gibbs_curve(es.energies, sz, targets);
        {
            std::ofstream os("acceptance_out/gibbs_model3_L14_k0_ip1.csv");
            export_gibbs_curve(os, curve);
        }
        ck.require(!rows.empty(), "Model-III eigenreport written");
    }
    std::cout << "    (CSV outputs in acceptance_out/)\n";
    return ck.failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
    linalg::pin_blas_single_thread();
    const char* names[] = {
        "dimension formulas (closed forms + brute-force enumeration)",
        "inert census (recurrence, closed forms, OBC/PBC ratio)",
        "fragmentation (Model-I shattering, PXP block, motif labels; Model-III connected)",
        "conservation suite (O_i, N_++, CHC = -H, +-E spectra)",
        "Model-II all-(+1) block = spin-1/2 PXP; all-(-1) block zero mode",
        "special states (residuals, S_z, Schmidt spectra, RDM)",
        "FSA (n_f, closed-form first errors, beta_1, total-error ordering)",
        "Z2 dynamics at L=12 (conservation, PXP equivalence, weights, slopes)",
        "Fig.2-style eigenreports and Gibbs curves (L=16 / L=14 sectors)",
    };
    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
    int failures = 0;
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    for (int i = 1; i <= 9; ++i) {
        if (only != 0 && only != i) continue;
        const auto t0 = Clock::now();
        const bool ok = criteria[i - 1]();
        failures += !ok;
        std::printf("Criterion %d: %s — %s  [%.1f s]\n", i, ok ? "PASS" : "FAIL", names[i - 1],
                    wall_seconds(t0));
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
