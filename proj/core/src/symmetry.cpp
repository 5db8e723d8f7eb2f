#include "pxp1/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <ostream>

namespace pxp1 {

int particle_hole_sign(std::uint64_t code, int length) {
    int zeros = 0;
    for (int i = 0; i < length; ++i) {
        zeros += (code % 3) == 1;
        code /= 3;
    }
    return zeros % 2 == 0 ? 1 : -1;
}

std::vector<double> particle_hole_signs(const ConstrainedBasis& basis) {
    std::vector<double> s(static_cast<std::size_t>(basis.dimension()));
    for (std::int64_t i = 0; i < basis.dimension(); ++i)
        s[static_cast<std::size_t>(i)] = particle_hole_sign(basis.code(i), basis.length());
    return s;
}

void apply_particle_hole(const ConstrainedBasis& basis, std::span<double> vec) {
    if (static_cast<std::int64_t>(vec.size()) != basis.dimension())
        throw dimension_mismatch("apply_particle_hole: vector length != basis dimension");
    for (std::int64_t i = 0; i < basis.dimension(); ++i)
        vec[static_cast<std::size_t>(i)] *= particle_hole_sign(basis.code(i), basis.length());
}

double verify_anticommutation(const SparseOperator& h, const ConstrainedBasis& basis) {
    if (h.dim != basis.dimension())
        throw dimension_mismatch("verify_anticommutation: operator/basis dimension mismatch");
    std::vector<double> s = particle_hole_signs(basis);
    double m = 0.0;
    for (std::int64_t r = 0; r < h.dim; ++r)
        for (std::int64_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k) {
            const auto c = static_cast<std::size_t>(h.col[static_cast<std::size_t>(k)]);
            m = std::max(m, std::abs(h.val[static_cast<std::size_t>(k)] *
                                     (s[static_cast<std::size_t>(r)] + s[c])));
        }
    return m;
}

SymmetrySector SymmetrySector::build(const ConstrainedBasis& basis, int k, int inversion,
                                     int axis_offset) {
    if (basis.boundary() != Boundary::PBC)
        throw requires_pbc("symmetry sectors require a PBC basis");
    const int L = basis.length();
    if (k < 0 || k >= L) throw error("momentum index must be in [0, L)");
    const bool real = k == 0 || (L % 2 == 0 && k == L / 2);
    if (inversion != 0) {
        if (inversion != 1 && inversion != -1) throw error("inversion must be +1, -1 or 0 (none)");
        if (!real)
            throw error("inversion can only be resolved at k = 0 or k = L/2");
        if (!basis.constraint().reversal_symmetric())
            throw error("constraint set is not inversion symmetric");
    }

    SymmetrySector sec;
    sec.parent_ = &basis;
    sec.k_ = k;
    sec.inv_ = inversion;
    sec.axis_ = axis_offset;
    sec.ptr_.push_back(0);

    const std::int64_t dim = basis.dimension();
    std::vector<bool> visited(static_cast<std::size_t>(dim), false);

    std::vector<std::uint64_t> orbit_codes;
    std::vector<std::complex<double>> orbit_coeffs;
    const double phase_step = -2.0 * std::numbers::pi * k / L;

    for (std::int64_t i0 = 0; i0 < dim; ++i0) {
        if (visited[static_cast<std::size_t>(i0)]) continue;
        const std::uint64_t rep = basis.code(i0);

        orbit_codes.clear();
        orbit_coeffs.clear();
        auto add = [&](std::uint64_t c, std::complex<double> x) {
            auto it = std::lower_bound(orbit_codes.begin(), orbit_codes.end(), c);
            const auto pos = static_cast<std::size_t>(it - orbit_codes.begin());
            if (it == orbit_codes.end() || *it != c) {
                orbit_codes.insert(it, c);
                orbit_coeffs.insert(orbit_coeffs.begin() + static_cast<std::ptrdiff_t>(pos), x);
            } else {
                orbit_coeffs[pos] += x;
            }
        };

        std::uint64_t c = rep;
        std::uint64_t ci = inversion != 0 ? basis.invert(rep, axis_offset) : 0;
        for (int j = 0; j < L; ++j) {
            const std::complex<double> chi =
                real ? std::complex<double>(k == 0 || j % 2 == 0 ? 1.0 : -1.0, 0.0)
                     : std::polar(1.0, phase_step * j);
            add(c, chi);
            if (inversion != 0) add(ci, static_cast<double>(inversion) * chi);
            c = basis.translate(c);
            if (inversion != 0) ci = basis.translate(ci);
        }

        double norm2 = 0.0;
        for (auto& x : orbit_coeffs) norm2 += std::norm(x);
        // coeffs are sums of +-1 (real case) or full root-of-unity cosets;
        // exact zeros only, so any comfortably small threshold works
        const bool included = norm2 > 0.25;

        const double inv_norm = included ? 1.0 / std::sqrt(norm2) : 0.0;
        std::uint64_t min_code = rep;
        for (std::size_t j = 0; j < orbit_codes.size(); ++j) {
            const std::int64_t idx = basis.index_of(orbit_codes[j]);
            if (idx < 0) throw error("symmetry image left the basis (non-symmetric constraints?)");
            visited[static_cast<std::size_t>(idx)] = true;
            min_code = std::min(min_code, orbit_codes[j]);
            if (included && std::norm(orbit_coeffs[j]) > 0.25)
                sec.entries_.push_back({idx, orbit_coeffs[j] * inv_norm});
        }
        if (included) {
            sec.reps_.push_back(min_code);
            sec.ptr_.push_back(static_cast<std::int64_t>(sec.entries_.size()));
        }
    }
    return sec;
}

bool SymmetrySector::real_phases() const {
    const int L = parent_->length();
    return k_ == 0 || (L % 2 == 0 && k_ == L / 2);
}

std::span<const SymmetrySector::Entry> SymmetrySector::entries(std::int64_t v) const {
    const auto b = static_cast<std::size_t>(ptr_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(ptr_[static_cast<std::size_t>(v) + 1]);
    return {entries_.data() + b, e - b};
}

void SymmetrySector::lift(std::span<const double> sector_vec, std::span<double> full_vec) const {
    if (static_cast<std::int64_t>(sector_vec.size()) != dimension() ||
        static_cast<std::int64_t>(full_vec.size()) != parent_->dimension())
        throw dimension_mismatch("lift: vector sizes do not match");
    std::fill(full_vec.begin(), full_vec.end(), 0.0);
    for (std::int64_t v = 0; v < dimension(); ++v) {
        const double a = sector_vec[static_cast<std::size_t>(v)];
        if (a == 0.0) continue;
        for (const Entry& e : entries(v))
            full_vec[static_cast<std::size_t>(e.full_index)] += a * e.coeff.real();
    }
}

std::vector<std::complex<double>> SymmetrySector::lift(
    std::span<const std::complex<double>> sector_vec) const {
    if (static_cast<std::int64_t>(sector_vec.size()) != dimension())
        throw dimension_mismatch("lift: vector sizes do not match");
    std::vector<std::complex<double>> full(static_cast<std::size_t>(parent_->dimension()), 0.0);
    for (std::int64_t v = 0; v < dimension(); ++v) {
        const std::complex<double> a = sector_vec[static_cast<std::size_t>(v)];
        for (const Entry& e : entries(v)) full[static_cast<std::size_t>(e.full_index)] += a * e.coeff;
    }
    return full;
}

SparseOperator build_sector_hamiltonian(const SymmetrySector& sector) {
    if (!sector.real_phases())
        throw requires_real_sector("sector Hamiltonian is real only at k = 0 or L/2");
    const ConstrainedBasis& basis = sector.parent();
    const std::int64_t dim_full = basis.dimension();
    const std::int64_t dim = sector.dimension();

    std::vector<std::int32_t> vec_of(static_cast<std::size_t>(dim_full), -1);
    std::vector<double> coeff_of(static_cast<std::size_t>(dim_full), 0.0);
    for (std::int64_t v = 0; v < dim; ++v)
        for (const auto& e : sector.entries(v)) {
            vec_of[static_cast<std::size_t>(e.full_index)] = static_cast<std::int32_t>(v);
            coeff_of[static_cast<std::size_t>(e.full_index)] = e.coeff.real();
        }

    const double amp = 1.0 / std::sqrt(2.0);
    SparseOperator h;
    h.dim = dim;
    h.hermitian = true;
    h.row_ptr.assign(static_cast<std::size_t>(dim) + 1, 0);

    std::vector<double> scratch(static_cast<std::size_t>(dim), 0.0);
    std::vector<std::int32_t> touched;
    for (std::int64_t a = 0; a < dim; ++a) {
        touched.clear();
        for (const auto& ea : sector.entries(a)) {
            const double wa = ea.coeff.real();
            for_each_flip(basis, basis.code(ea.full_index), [&](int, int, std::uint64_t target) {
                const std::int64_t j = basis.index_of(target);
                const std::int32_t b = vec_of[static_cast<std::size_t>(j)];
                if (b < 0) return;  // orbit excluded from this sector
                if (scratch[static_cast<std::size_t>(b)] == 0.0) touched.push_back(b);
                scratch[static_cast<std::size_t>(b)] += wa * amp * coeff_of[static_cast<std::size_t>(j)];
            });
        }
        std::sort(touched.begin(), touched.end());
        for (auto b : touched) {
            const double x = scratch[static_cast<std::size_t>(b)];
            scratch[static_cast<std::size_t>(b)] = 0.0;
            if (x != 0.0) {
                h.col.push_back(b);
                h.val.push_back(x);
            }
        }
        h.row_ptr[static_cast<std::size_t>(a) + 1] = static_cast<std::int64_t>(h.col.size());
    }
    return h;
}

void export_sector_report(std::ostream& os, const SymmetrySector& sector) {
    os << "k=" << sector.momentum();
    if (sector.inversion() != 0) os << " I=" << (sector.inversion() > 0 ? "+1" : "-1");
    else os << " I=none";
    os << " dim=" << sector.dimension() << '\n';
    for (std::int64_t v = 0; v < sector.dimension(); ++v)
        os << SpinConfig{sector.representative(v), sector.parent().length()}.to_string() << '\n';
}

}  // namespace pxp1
