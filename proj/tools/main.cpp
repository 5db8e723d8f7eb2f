// pxp1 command line driver: constrained spin-1 chain analyses as
// subcommands. Exit codes: 0 success, 2 config error, 3 verification
// failure, 4 resource limit.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <omp.h>

#include "pxp1/dynamics.hpp"
#include "pxp1/fragmentation.hpp"
#include "pxp1/fsa.hpp"
#include "pxp1/linalg.hpp"
#include "pxp1/reports.hpp"
#include "pxp1/spectral.hpp"
#include "pxp1/symmetry.hpp"

using namespace pxp1;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResource = 4;

struct CommonOpts {
    std::string model = "I";
    std::string forbid;
    int length = 8;
    std::string bc = "pbc";
    std::string sector = "full";
    std::string out = ".";
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_sector = true) {
    cmd->add_option("--model", o.model, "model preset: I, II, III, free, pxp1")
        ->check(CLI::IsMember({"I", "II", "III", "free", "pxp1"}));
    cmd->add_option("--forbid", o.forbid,
                    "explicit forbidden pairs like '00,+0,0+' (overrides --model)");
    cmd->add_option("--L", o.length, "chain length")->required();
    cmd->add_option("--bc", o.bc, "boundary condition: obc or pbc")
        ->check(CLI::IsMember({"obc", "pbc"}));
    if (with_sector)
        cmd->add_option("--sector", o.sector,
                        "symmetry sector 'k=<int>,inv=<+1|-1|none>' or 'full' (pbc only)");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--workers", o.workers, "worker threads (default: all cores)");
}

ConstraintSet resolve_constraint(const CommonOpts& o) {
    if (!o.forbid.empty()) return ConstraintSet::from_pairs(o.forbid);
    if (o.model == "I") return ConstraintSet::preset(ModelPreset::ModelI);
    if (o.model == "II") return ConstraintSet::preset(ModelPreset::ModelII);
    if (o.model == "III") return ConstraintSet::preset(ModelPreset::ModelIII);
    if (o.model == "free") return ConstraintSet::preset(ModelPreset::Free);
    if (o.model == "pxp1") return ConstraintSet::preset(ModelPreset::PxpSpin1);
    throw error("unknown model: " + o.model);
}

struct SectorSpec {
    bool full = true;
    int k = 0;
    int inversion = 0;
};

SectorSpec parse_sector(const std::string& s) {
    SectorSpec spec;
    if (s == "full" || s.empty()) return spec;
    spec.full = false;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw error("bad --sector item: " + item);
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "k")
            spec.k = std::stoi(value);
        else if (key == "inv")
            spec.inversion = value == "none" ? 0 : std::stoi(value);
        else
            throw error("bad --sector key: " + key);
    }
    return spec;
}

void apply_workers(int workers) {
    linalg::pin_blas_single_thread();
    if (workers > 0) omp_set_num_threads(workers);
}

std::ofstream open_out(const CommonOpts& o, const std::string& name) {
    fs::create_directories(o.out);
    std::ofstream f(fs::path(o.out) / name);
    if (!f) throw error("cannot open output file " + name);
    std::cout << "wrote " << (fs::path(o.out) / name).string() << '\n';
    return f;
}

std::string file_tag(const CommonOpts& o) {
    std::string model = o.forbid.empty() ? o.model : "custom";
    return model + "_L" + std::to_string(o.length) + "_" + o.bc;
}

// ---------------------------------------------------------------------- basis

int cmd_basis(const CommonOpts& o) {
    apply_workers(o.workers);
    const ConstraintSet cs = resolve_constraint(o);
    const Boundary bc = boundary_from_string(o.bc);
    auto basis = ConstrainedBasis::enumerate(cs, o.length, bc);
    {
        auto f = open_out(o, "basis_" + file_tag(o) + ".txt");
        export_basis(f, basis);
    }
    auto f = open_out(o, "basis_report_" + file_tag(o) + ".csv");
    f << "constraint,L,bc,dim,transfer_count,closed_form,closed_form_matches\n";
    const auto count = count_dimension(cs, o.length, bc);
    std::string closed = "", match = "";
    if (bc == Boundary::OBC && (cs.preset_tag() == ModelPreset::ModelII ||
                                cs.preset_tag() == ModelPreset::ModelIII)) {
        const double cf = closed_form_dimension(cs.preset_tag(), o.length);
        closed = fmt17(cf);
        match = static_cast<std::uint64_t>(std::llround(cf)) == count ? "yes" : "no";
    }
    f << cs.label() << ',' << o.length << ',' << to_string(bc) << ',' << basis.dimension() << ','
      << count << ',' << closed << ',' << match << '\n';
    std::cout << "dim=" << basis.dimension() << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------- spectrum

int cmd_spectrum(const CommonOpts& o, std::int64_t dense_limit, int gibbs_points) {
    apply_workers(o.workers);
    const ConstraintSet cs = resolve_constraint(o);
    const Boundary bc = boundary_from_string(o.bc);
    auto basis = ConstrainedBasis::enumerate(cs, o.length, bc);
    const SectorSpec spec = parse_sector(o.sector);

    EigenSystem es;
    std::vector<double> sz;
    std::vector<EigenReportRow> rows;
    std::string tag = file_tag(o);
    if (spec.full) {
        auto h = build_hamiltonian(basis);
        es = diagonalize(h, dense_limit, true);
        rows = eigen_report(es, basis, o.length / 2 > 0 ? o.length / 2 : 1);
        sz = eigenstate_diagonal_expectation(es, sz_diagonal(basis));
    } else {
        auto sector = SymmetrySector::build(basis, spec.k, spec.inversion);
        auto h = build_sector_hamiltonian(sector);
        es = diagonalize(h, dense_limit, true);
        rows = eigen_report(es, sector, o.length / 2 > 0 ? o.length / 2 : 1);
        sz = eigenstate_diagonal_expectation(es, sz_diagonal(sector));
        tag += "_k" + std::to_string(spec.k) +
               (spec.inversion ? (spec.inversion > 0 ? "_ip1" : "_im1") : "");
        auto rf = open_out(o, "sector_" + tag + ".txt");
        export_sector_report(rf, sector);
    }
    {
        auto f = open_out(o, "eigenreport_" + tag + ".csv");
        export_eigen_report(f, rows);
    }
    if (gibbs_points > 1) {
        std::vector<double> targets;
        const double emin = es.energies.front(), emax = es.energies.back();
        for (int i = 0; i < gibbs_points; ++i)
            targets.push_back(emin + (emax - emin) * i / (gibbs_points - 1.0));
        auto curve = gibbs_curve(es.energies, sz, targets);
        auto f = open_out(o, "gibbs_" + tag + ".csv");
        export_gibbs_curve(f, curve);
    }
    std::cout << "dim=" << es.dim << " E_min=" << fmt17(es.energies.front())
              << " E_max=" << fmt17(es.energies.back()) << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------ fragments

int cmd_fragments(const CommonOpts& o) {
    apply_workers(o.workers);
    const ConstraintSet cs = resolve_constraint(o);
    const Boundary bc = boundary_from_string(o.bc);
    auto basis = ConstrainedBasis::enumerate(cs, o.length, bc);
    auto h = build_hamiltonian(basis);
    auto frags = decompose(h);
    auto f = open_out(o, "fragments_" + file_tag(o) + ".csv");
    export_fragment_census(f, basis, frags);
    auto census = enumerate_inert(cs, o.length, bc);
    std::cout << "fragments=" << frags.count() << " largest=" << frags.size_histogram().front()
              << " inert=" << census.count << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------------ fsa

int cmd_fsa(const CommonOpts& o, const std::string& convention, bool keep_vectors) {
    apply_workers(o.workers);
    const ConstraintSet cs = resolve_constraint(o);
    const Boundary bc = boundary_from_string(o.bc);
    if (bc != Boundary::PBC) throw error("fsa expects --bc pbc");
    auto basis = ConstrainedBasis::enumerate(cs, o.length, bc);
    auto h = build_hamiltonian(basis);
    auto split = split_hamiltonian(h, basis);
    const DeltaConvention conv =
        convention == "norm" ? DeltaConvention::Norm : DeltaConvention::SquaredNorm;
    auto run = forward_scatter(split, basis, keep_vectors, conv);
    {
        auto f = open_out(o, "fsa_" + file_tag(o) + ".csv");
        export_fsa_run(f, run);
    }
    std::optional<double> analytic;
    if (cs.preset_tag() == ModelPreset::ModelI || cs.preset_tag() == ModelPreset::ModelII ||
        cs.preset_tag() == ModelPreset::ModelIII)
        analytic = analytic_first_error(cs.preset_tag(), o.length);
    {
        auto f = open_out(o, "fsa_summary_" + file_tag(o) + ".json");
        f << "{\n"
          << "  \"model\": \"" << cs.label() << "\",\n"
          << "  \"L\": " << o.length << ",\n"
          << "  \"n_f\": " << run.first_error_index << ",\n"
          << "  \"delta_total\": " << fmt17(run.delta_total) << ",\n"
          << "  \"analytic_first_error\": " << (analytic ? fmt17(*analytic) : "null") << ",\n"
          << "  \"convention\": \"" << (conv == DeltaConvention::Norm ? "norm" : "norm2")
          << "\"\n}\n";
    }
    if (keep_vectors) {
        auto overlaps = fsa_spectrum_and_overlap(run, basis);
        auto f = open_out(o, "fsa_overlap_" + file_tag(o) + ".csv");
        f << "energy,z2_overlap_sq\n";
        for (const auto& p : overlaps)
            f << fmt17(p.energy) << ',' << fmt17(p.z2_overlap_sq) << '\n';
    }
    std::cout << "n_f=" << run.first_error_index << " delta_total=" << fmt17(run.delta_total)
              << '\n';
    return kExitOk;
}

// --------------------------------------------------------------------- quench

int cmd_quench(const CommonOpts& o, double tmax, double dt, const std::string& method,
               std::int64_t dense_limit) {
    apply_workers(o.workers);
    const ConstraintSet cs = resolve_constraint(o);
    const Boundary bc = boundary_from_string(o.bc);
    auto basis = ConstrainedBasis::enumerate(cs, o.length, bc);
    auto h = build_hamiltonian(basis);
    QuenchParams p;
    p.t_max = tmax;
    p.dt = dt;
    p.method = method == "spectral" ? EvolveMethod::Spectral : EvolveMethod::KrylovStep;
    p.dense_limit = dense_limit;
    auto res = evolve_z2(h, basis, p);
    auto f = open_out(o, "quench_" + file_tag(o) + ".csv");
    export_quench_series(f, res);
    std::cout << "samples=" << res.t.size() << " final_fidelity=" << fmt17(res.fidelity.back())
              << '\n';
    return kExitOk;
}

// -------------------------------------------------------------------- entropy

int cmd_entropy(const CommonOpts& o, const std::string& state, int cut) {
    apply_workers(o.workers);
    const ConstraintSet cs = resolve_constraint(o);
    const Boundary bc = boundary_from_string(o.bc);
    const int c = cut > 0 ? cut : o.length / 2;
    std::vector<std::pair<std::uint64_t, double>> amps;
    if (state == "z2") {
        amps = {{z2_code(o.length), 1.0}};
    } else if (state == "allminus") {
        amps = {{0, 1.0}};
    } else if (state.rfind("special", 0) == 0 && state.size() == 9) {
        const int family = state[7] - '0';
        const int sign = state[8] == '-' ? -1 : +1;
        if (bc != Boundary::PBC) throw error("special states are PBC states");
        amps = build_special_state(family, sign, o.length).amplitudes;
    } else {
        throw error("unknown --state (use z2, allminus, special1+, special1-, special2+, special2-)");
    }
    // states must live in the requested constrained space
    auto basis = ConstrainedBasis::enumerate(cs, o.length, bc);
    for (const auto& [code, amp] : amps)
        if (!basis.contains(code)) throw error("state has support outside this basis");
    const double s = entanglement_entropy(amps, o.length, c);
    auto f = open_out(o, "entropy_" + file_tag(o) + ".csv");
    f << "state,cut,entropy\n" << state << ',' << c << ',' << fmt17(s) << '\n';
    std::cout << "S(" << state << ", cut=" << c << ") = " << fmt17(s) << '\n';
    return kExitOk;
}

// --------------------------------------------------------------------- verify

int cmd_verify(const CommonOpts& o) {
    apply_workers(o.workers);
    const int L = o.length;
    int failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << what << '\n';
        failures += !ok;
    };

    // closed-form dimensions
    {
        bool ok = true;
        for (int l = 1; l <= 20; ++l) {
            ok = ok && count_dimension(ConstraintSet::preset(ModelPreset::ModelII), l,
                                       Boundary::OBC) ==
                           static_cast<std::uint64_t>(
                               std::llround(closed_form_dimension(ModelPreset::ModelII, l)));
            ok = ok && count_dimension(ConstraintSet::preset(ModelPreset::ModelIII), l,
                                       Boundary::OBC) ==
                           static_cast<std::uint64_t>(
                               std::llround(closed_form_dimension(ModelPreset::ModelIII, l)));
        }
        report(ok, "Table-1 closed-form dimensions (L <= 20, OBC)");
    }
    // inert counts
    {
        bool ok = true;
        for (int l = 5; l <= std::min(L, 14); ++l)
            for (Boundary bc : {Boundary::OBC, Boundary::PBC})
                ok = ok && enumerate_inert(ConstraintSet::preset(ModelPreset::ModelI), l, bc)
                               .count == inert_count_closed_form(l, bc);
        report(ok, "inert-state closed forms vs enumeration");
    }
    // conserved quantities
    {
        auto basis = ConstrainedBasis::enumerate(ConstraintSet::preset(ModelPreset::ModelI), L,
                                                 Boundary::PBC);
        report(commutator_max_abs(conserved_Npp(basis), build_hamiltonian(basis)) == 0.0,
               "[N_++, H^I] = 0 at L=" + std::to_string(L));
    }
    {
        auto basis = ConstrainedBasis::enumerate(ConstraintSet::preset(ModelPreset::ModelII), L,
                                                 Boundary::PBC);
        auto h = build_hamiltonian(basis);
        bool ok = true;
        for (int i = 0; i < L; ++i) ok = ok && commutator_max_abs(conserved_Oi(basis, i), h) == 0.0;
        report(ok, "[O_i, H^II] = 0 for all sites at L=" + std::to_string(L));
    }
    // particle-hole anticommutation and +-E spectra
    for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelII, ModelPreset::ModelIII}) {
        auto basis = ConstrainedBasis::enumerate(ConstraintSet::preset(m), L, Boundary::PBC);
        auto h = build_hamiltonian(basis);
        report(verify_anticommutation(h, basis) == 0.0,
               std::string("CHC = -H for model ") + std::string(to_string(m)));
        if (basis.dimension() <= 4000) {
            auto es = diagonalize(h, 4000, false);
            double worst = 0.0;
            const std::size_t n = es.energies.size();
            for (std::size_t i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(es.energies[i] + es.energies[n - 1 - i]));
            report(worst <= 1e-10,
                   std::string("+-E spectrum for model ") + std::string(to_string(m)));
        }
    }
    // special states
    if (L >= 5) {
        bool ok = true;
        for (int sign : {+1, -1}) {
            auto s = build_special_state(1, sign, L);
            ok = ok && special_state_residual(s) < 1e-12 &&
                 std::abs(magnetization(s) - (L - 5)) <= 1e-10;
        }
        report(ok, "E = +-1 special states at L=" + std::to_string(L));
    }
    if (L >= 10 && L % 2 == 0) {
        bool ok = true;
        for (int sign : {+1, -1}) {
            auto s = build_special_state(2, sign, L);
            ok = ok && special_state_residual(s) < 1e-12 &&
                 std::abs(magnetization(s) - (L - 10)) <= 1e-10 &&
                 std::abs(entanglement_entropy(s.amplitudes, L, L / 2) -
                          (std::log(L) - std::log(2.0))) <= 1e-10;
        }
        report(ok, "E = +-2 special states at L=" + std::to_string(L));
    }
    // FSA first errors
    if (L % 2 == 0) {
        bool ok = true;
        for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelII, ModelPreset::ModelIII}) {
            auto basis = ConstrainedBasis::enumerate(ConstraintSet::preset(m), L, Boundary::PBC);
            auto run = forward_scatter(split_hamiltonian(build_hamiltonian(basis), basis), basis);
            ok = ok && run.first_error_index == analytic_first_error_step(m) &&
                 std::abs(run.delta[static_cast<std::size_t>(run.first_error_index) - 1] -
                          analytic_first_error(m, L)) <= 1e-10;
        }
        report(ok, "FSA first nonzero errors match the closed forms at L=" + std::to_string(L));
    }
    std::cout << (failures == 0 ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
    return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained spin-1 PXP chains: exact diagonalization, fragmentation, FSA, dynamics"};
    app.require_subcommand(1);

    CommonOpts basis_o, spectrum_o, fragments_o, fsa_o, quench_o, entropy_o, verify_o;
    std::int64_t dense_limit = 20000;
    int gibbs_points = 0;
    std::string fsa_convention = "norm2";
    bool fsa_keep_vectors = false;
    double tmax = 30.0, dt = 0.05;
    std::string method = "krylov";
    std::int64_t quench_dense_limit = 6000;
    std::string entropy_state = "z2";
    int entropy_cut = 0;

    auto* cb = app.add_subcommand("basis", "enumerate a constrained basis and export it");
    add_common(cb, basis_o, false);

    auto* csp = app.add_subcommand("spectrum", "diagonalize and write the eigenreport");
    add_common(csp, spectrum_o);
    csp->add_option("--dense-limit", dense_limit, "largest dimension for full diagonalization");
    csp->add_option("--gibbs", gibbs_points, "also write a Gibbs S_z curve with this many points");

    auto* cf = app.add_subcommand("fragments", "connected-component census");
    add_common(cf, fragments_o, false);

    auto* cfsa = app.add_subcommand("fsa", "forward scattering approximation run");
    add_common(cfsa, fsa_o, false);
    cfsa->add_option("--fsa-convention", fsa_convention, "delta convention: norm or norm2")
        ->check(CLI::IsMember({"norm", "norm2"}));
    cfsa->add_flag("--keep-vectors", fsa_keep_vectors,
                   "retain FSA vectors and write the overlap report");

    auto* cq = app.add_subcommand("quench", "evolve |Z2> and write the time series");
    add_common(cq, quench_o, false);
    cq->add_option("--tmax", tmax, "evolution time");
    cq->add_option("--dt", dt, "time step");
    cq->add_option("--method", method, "spectral or krylov")
        ->check(CLI::IsMember({"spectral", "krylov"}));
    cq->add_option("--dense-limit", quench_dense_limit, "size cap for the spectral method");

    auto* ce = app.add_subcommand("entropy", "half-cut entropy of a named state");
    add_common(ce, entropy_o, false);
    ce->add_option("--state", entropy_state,
                   "z2, allminus, special1+, special1-, special2+, special2-");
    ce->add_option("--cut", entropy_cut, "left-half length (default L/2)");

    auto* cv = app.add_subcommand("verify", "run the conserved-quantity and closed-form suites");
    add_common(cv, verify_o, false);

    try {
        app.parse(argc, argv);
        if (cb->parsed()) return cmd_basis(basis_o);
        if (csp->parsed()) return cmd_spectrum(spectrum_o, dense_limit, gibbs_points);
        if (cf->parsed()) return cmd_fragments(fragments_o);
        if (cfsa->parsed()) return cmd_fsa(fsa_o, fsa_convention, fsa_keep_vectors);
        if (cq->parsed()) return cmd_quench(quench_o, tmax, dt, method, quench_dense_limit);
        if (ce->parsed()) return cmd_entropy(entropy_o, entropy_state, entropy_cut);
        if (cv->parsed()) return cmd_verify(verify_o);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const length_too_large& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const too_large_for_full_spectrum& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const method_infeasible& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
