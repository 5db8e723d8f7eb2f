#include <doctest.h>

#include <cmath>

#include "pxp1/dynamics.hpp"
#include "pxp1/fragmentation.hpp"
#include "pxp1/fsa.hpp"

using namespace pxp1;

namespace {

ConstrainedBasis make(ModelPreset m, int L) {
    return ConstrainedBasis::enumerate(ConstraintSet::preset(m), L, Boundary::PBC);
}

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("initial samples and conservation laws") {
    for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelII, ModelPreset::ModelIII}) {
        auto basis = make(m, 8);
        auto h = build_hamiltonian(basis);
        QuenchParams p;
        p.t_max = 10.0;
        auto res = evolve_z2(h, basis, p);
        CAPTURE(to_string(m));
        CHECK(res.fidelity[0] == 1.0);
        CHECK(res.o_avg[0] == 0.0);
        CHECK(res.s_half[0] <= 1e-12);
        CHECK(std::abs(res.energy[0]) <= 1e-13);  // <Z2|H|Z2> = 0
        for (std::size_t i = 0; i < res.t.size(); ++i) {
            CHECK(std::abs(res.norm[i] - 1.0) <= 1e-10);
            CHECK(std::abs(res.energy[i]) <= 1e-10);  // conserved at its initial value
        }
    }
}

TEST_CASE("spectral and krylov propagation agree") {
    for (ModelPreset m : {ModelPreset::ModelI, ModelPreset::ModelIII}) {
        auto basis = make(m, 8);
        auto h = build_hamiltonian(basis);
        QuenchParams ps;
        ps.method = EvolveMethod::Spectral;
        ps.t_max = 30.0;
        QuenchParams pk;
        pk.method = EvolveMethod::KrylovStep;
        pk.t_max = 30.0;
        auto a = evolve_z2(h, basis, ps);
        auto b = evolve_z2(h, basis, pk);
        CAPTURE(to_string(m));
        for (std::size_t i = 0; i < a.t.size(); ++i) {
            CHECK(std::abs(a.fidelity[i] - b.fidelity[i]) <= 1e-8);
            CHECK(std::abs(a.o_avg[i] - b.o_avg[i]) <= 1e-8);
            CHECK(std::abs(a.s_half[i] - b.s_half[i]) <= 1e-8);
            CHECK(std::abs(a.energy[i] - b.energy[i]) <= 1e-8);
        }
    }
}

TEST_CASE("model-I dynamics is the spin-1 PXP dynamics") {
    const int L = 10;
    auto basis1 = make(ModelPreset::ModelI, L);
    auto basisP = make(ModelPreset::PxpSpin1, L);
    QuenchParams p;
    p.t_max = 10.0;
    auto a = evolve_z2(build_hamiltonian(basis1), basis1, p);
    auto b = evolve_z2(build_hamiltonian(basisP), basisP, p);
    for (std::size_t i = 0; i < a.t.size(); ++i) {
        CHECK(std::abs(a.fidelity[i] - b.fidelity[i]) <= 1e-10);
        CHECK(std::abs(a.o_avg[i] - b.o_avg[i]) <= 1e-10);
        CHECK(std::abs(a.s_half[i] - b.s_half[i]) <= 1e-10);
        CHECK(std::abs(a.energy[i] - b.energy[i]) <= 1e-10);
    }
    // structural no-leak: the fragment holding Z2 is exactly the PXP space,
    // and H has no matrix element out of a component by construction
    auto frags = decompose(build_hamiltonian(basis1));
    const auto z2 = basis1.index_of(z2_code(L));
    const auto comp = frags.component_of[static_cast<std::size_t>(z2)];
    std::int64_t size = 0;
    for (auto c : frags.component_of) size += c == comp;
    CHECK(size == basisP.dimension());
}

TEST_CASE("free chain: product state stays product") {
    auto basis = make(ModelPreset::Free, 6);
    auto h = build_hamiltonian(basis);
    QuenchParams p;
    p.t_max = 10.0;
    p.method = EvolveMethod::Spectral;
    auto res = evolve_z2(h, basis, p);
    for (std::size_t i = 0; i < res.t.size(); ++i) CHECK(res.s_half[i] <= 1e-9);
}

TEST_CASE("z2 sector weights of Model-II are uniform dyadics") {
    for (int L : {4, 6}) {
        auto basis = make(ModelPreset::ModelII, L);
        auto weights = z2_sector_weights_model2(basis);
        REQUIRE(weights.size() == (1ull << L));
        const double expect = std::ldexp(1.0, -L);
        double sum = 0.0;
        for (const auto& [name, w] : weights) {
            CHECK(w == expect);  // exact dyadic equality
            CHECK(name.size() == static_cast<std::size_t>(L));
            sum += w;
        }
        CHECK(sum == 1.0);
        CHECK(std::is_sorted(weights.begin(), weights.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; }));
    }
}

TEST_CASE("entropy growth slopes are positive and the report is wired up") {
    QuenchParams p;
    p.t_max = 3.0;
    auto b1 = make(ModelPreset::ModelI, 8);
    auto b2 = make(ModelPreset::ModelII, 8);
    auto b3 = make(ModelPreset::ModelIII, 8);
    auto r1 = evolve_z2(build_hamiltonian(b1), b1, p);
    auto r2 = evolve_z2(build_hamiltonian(b2), b2, p);
    auto r3 = evolve_z2(build_hamiltonian(b3), b3, p);
    auto rep = entropy_growth_comparison(r1, r2, r3);
    CHECK(rep.slope_model1 > 0.0);
    CHECK(rep.slope_model2 > 0.0);
    CHECK(rep.slope_model3 > 0.0);
}

TEST_CASE("series_slope recovers a linear trend") {
    std::vector<double> t, y;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(0.05 * i);
        y.push_back(3.25 * 0.05 * i - 0.7);
    }
    CHECK(std::abs(series_slope(t, y, 0.0, 5.0) - 3.25) <= 1e-12);
    CHECK_THROWS_AS((void)series_slope(t, y, 90.0, 91.0), error);
}

TEST_CASE("evolve_z2 validates inputs") {
    auto basis = make(ModelPreset::ModelI, 8);
    auto h = build_hamiltonian(basis);
    QuenchParams p;
    p.method = EvolveMethod::Spectral;
    p.dense_limit = 10;
    CHECK_THROWS_AS((void)evolve_z2(h, basis, p), method_infeasible);
    auto pxp = ConstrainedBasis::enumerate(ConstraintSet::from_pairs("-+"), 4, Boundary::PBC);
    auto hp = build_hamiltonian(pxp);
    CHECK_THROWS_AS((void)evolve_z2(hp, pxp, QuenchParams{}), z2_not_in_basis);
}

TEST_SUITE_END();
