#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

using pxp1::Boundary;

namespace {

int digit_at(std::uint64_t code, int site) {
    for (int i = 0; i < site; ++i) code /= 3;
    return static_cast<int>(code % 3);
}

}  // namespace

std::vector<std::uint64_t> brute_force_codes(const pxp1::ConstraintSet& cs, int length,
                                             Boundary bc) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = pxp1::pow3(length);
    for (std::uint64_t code = 0; code < total; ++code) {
        bool ok = true;
        for (int i = 0; ok && i + 1 < length; ++i)
            ok = cs.allowed(digit_at(code, i), digit_at(code, i + 1));
        if (ok && bc == Boundary::PBC)
            ok = cs.allowed(digit_at(code, length - 1), digit_at(code, 0));
        if (ok) out.push_back(code);
    }
    return out;
}

std::vector<double> dense_projected_hamiltonian(const pxp1::ConstraintSet& cs, int length,
                                                Boundary bc,
                                                const std::vector<std::uint64_t>& codes) {
    const std::uint64_t full = pxp1::pow3(length);
    const double amp = 1.0 / std::sqrt(2.0);
    // full-space S^x sum, no constraints
    std::vector<double> hfull(full * full, 0.0);
    for (std::uint64_t c = 0; c < full; ++c) {
        std::uint64_t p3 = 1;
        for (int site = 0; site < length; ++site, p3 *= 3) {
            const int d = digit_at(c, site);
            if (d == 1) {
                hfull[(c - p3) + c * full] += amp;
                hfull[(c + p3) + c * full] += amp;
            } else {
                const std::uint64_t t = d == 0 ? c + p3 : c - p3;
                hfull[t + c * full] += amp;
            }
        }
    }
    // projector sandwich: zero rows and columns of disallowed configs
    std::vector<bool> allowed(full, false);
    for (std::uint64_t c : codes) allowed[c] = true;
    // (codes must themselves be the allowed set for the sandwich to equal
    // a restriction; recompute independently)
    for (std::uint64_t c = 0; c < full; ++c) {
        bool ok = true;
        for (int i = 0; ok && i + 1 < length; ++i)
            ok = cs.allowed(digit_at(c, i), digit_at(c, i + 1));
        if (ok && bc == Boundary::PBC)
            ok = cs.allowed(digit_at(c, length - 1), digit_at(c, 0));
        if (ok != allowed[c]) throw std::runtime_error("oracle: code list mismatch");
    }
    for (std::uint64_t r = 0; r < full; ++r)
        for (std::uint64_t c = 0; c < full; ++c)
            if (!allowed[r] || !allowed[c]) hfull[r + c * full] = 0.0;
    // restrict
    const std::size_t n = codes.size();
    std::vector<double> h(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) h[i + j * n] = hfull[codes[i] + codes[j] * full];
    return h;
}

SpinHalfPxp spin_half_pxp(int length, Boundary bc) {
    SpinHalfPxp out;
    for (std::uint64_t c = 0; c < (1ull << length); ++c) {
        bool ok = true;
        for (int i = 0; ok && i + 1 < length; ++i) ok = !((c >> i) & (c >> (i + 1)) & 1);
        if (ok && bc == Boundary::PBC && length > 1)
            ok = !((c >> (length - 1)) & c & 1);
        if (ok) out.configs.push_back(c);
    }
    const std::size_t n = out.configs.size();
    out.h.assign(n * n, 0.0);
    auto find = [&](std::uint64_t c) {
        return static_cast<std::size_t>(
            std::lower_bound(out.configs.begin(), out.configs.end(), c) - out.configs.begin());
    };
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t c = out.configs[j];
        for (int i = 0; i < length; ++i) {
            const std::uint64_t t = c ^ (1ull << i);
            bool ok = true;
            if (t & (1ull << i)) {  // flipping up requires both neighbors down
                if (i > 0 || bc == Boundary::PBC)
                    ok = ok && !((t >> ((i + length - 1) % length)) & 1);
                if (i < length - 1 || bc == Boundary::PBC)
                    ok = ok && !((t >> ((i + 1) % length)) & 1);
            }
            if (ok) out.h[find(t) + j * n] += 1.0;
        }
    }
    return out;
}

DenseFsa dense_fsa(const std::vector<double>& h, const std::vector<std::uint64_t>& codes,
                   int length, int z2_plus_parity) {
    const std::size_t n = codes.size();
    // classify every entry of H into H+ / H-
    std::vector<double> hp(n * n, 0.0), hm(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const double v = h[i + j * n];
            if (v == 0.0) continue;
            // flip site: first differing digit; action col j -> row i
            int site = -1, from = -1, to = -1;
            std::uint64_t a = codes[i], b = codes[j];
            for (int s = 0; s < length; ++s) {
                if (a % 3 != b % 3) {
                    site = s;
                    to = static_cast<int>(a % 3);
                    from = static_cast<int>(b % 3);
                    break;
                }
                a /= 3;
                b /= 3;
            }
            const bool raises = to > from;
            const bool on_plus = site % 2 == z2_plus_parity;
            if (on_plus != raises)
                hp[i + j * n] = v;
            else
                hm[i + j * n] = v;
        }
    std::uint64_t z2 = 0;
    for (int i = 0; i < length; ++i)
        if (i % 2 == z2_plus_parity) z2 += 2 * pxp1::pow3(i);
    std::size_t z2i = std::lower_bound(codes.begin(), codes.end(), z2) - codes.begin();

    std::vector<double> prev(n, 0.0), cur(n, 0.0), next(n), back(n);
    cur[z2i] = 1.0;
    DenseFsa run;
    auto matvec = [&](const std::vector<double>& m, const std::vector<double>& x,
                      std::vector<double>& y) {
        for (std::size_t r = 0; r < n; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < n; ++c) acc += m[r + c * n] * x[c];
            y[r] = acc;
        }
    };
    for (int step = 1; step <= 2 * length; ++step) {
        matvec(hp, cur, next);
        double b2 = 0.0;
        for (double x : next) b2 += x * x;
        const double beta = std::sqrt(b2);
        if (beta == 0.0) throw std::runtime_error("oracle fsa: premature annihilation");
        for (double& x : next) x /= beta;
        matvec(hm, next, back);
        double d2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = back[i] - beta * cur[i];
            d2 += d * d;
        }
        run.beta.push_back(beta);
        run.delta_sq.push_back(d2);
        prev.swap(cur);
        cur.swap(next);
    }
    return run;
}

std::int64_t count_fixed(const pxp1::ConstrainedBasis& basis, int shift, bool reflect,
                         int axis) {
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < basis.dimension(); ++i) {
        std::uint64_t c = basis.code(i);
        std::uint64_t g = reflect ? pxp1::invert_code(c, basis.length(), axis) : c;
        for (int j = 0; j < shift; ++j) g = pxp1::translate_code(g, basis.length());
        count += g == c;
    }
    return count;
}

}  // namespace oracle
