#include "pxp1/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace pxp1 {

int digit_from_char(char c) {
    switch (c) {
        case '-': return 0;
        case '0': return 1;
        case '+': return 2;
        default: throw error(std::string("invalid spin character '") + c + "'");
    }
}

std::string_view to_string(Boundary bc) { return bc == Boundary::OBC ? "OBC" : "PBC"; }

Boundary boundary_from_string(std::string_view s) {
    if (s == "obc" || s == "OBC") return Boundary::OBC;
    if (s == "pbc" || s == "PBC") return Boundary::PBC;
    throw error("unknown boundary condition: " + std::string(s));
}

std::string_view to_string(ModelPreset m) {
    switch (m) {
        case ModelPreset::ModelI: return "I";
        case ModelPreset::ModelII: return "II";
        case ModelPreset::ModelIII: return "III";
        case ModelPreset::Free: return "free";
        case ModelPreset::PxpSpin1: return "pxp1";
        case ModelPreset::Other: return "other";
    }
    return "other";
}

std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

int SpinConfig::digit(int site) const {
    return static_cast<int>((code / pow3(site)) % 3);
}

int SpinConfig::magnetization() const {
    int m = 0;
    std::uint64_t c = code;
    for (int i = 0; i < length; ++i) {
        m += static_cast<int>(c % 3) - 1;
        c /= 3;
    }
    return m;
}

std::string SpinConfig::to_string() const {
    std::string s(static_cast<std::size_t>(length), '-');
    std::uint64_t c = code;
    for (int i = 0; i < length; ++i) {
        s[static_cast<std::size_t>(i)] = kDigitChar[c % 3];
        c /= 3;
    }
    return s;
}

SpinConfig SpinConfig::from_string(std::string_view s) {
    SpinConfig cfg;
    cfg.length = static_cast<int>(s.size());
    for (int i = cfg.length - 1; i >= 0; --i)
        cfg.code = cfg.code * 3 + static_cast<std::uint64_t>(digit_from_char(s[static_cast<std::size_t>(i)]));
    return cfg;
}

ConstraintSet::ConstraintSet() {
    for (auto& row : forbidden_)
        for (auto& x : row) x = false;
    tag_ = ModelPreset::Free;
}

ConstraintSet ConstraintSet::preset(ModelPreset m) {
    ConstraintSet c;
    c.tag_ = m;
    auto forbid = [&](const char* p) { c.forbidden_[digit_from_char(p[0])][digit_from_char(p[1])] = true; };
    switch (m) {
        case ModelPreset::ModelI:
            forbid("00"); forbid("+0"); forbid("0+");
            break;
        case ModelPreset::ModelII:
            forbid("00");
            break;
        case ModelPreset::ModelIII:
            forbid("00"); forbid("++");
            break;
        case ModelPreset::PxpSpin1:
            forbid("00"); forbid("+0"); forbid("0+"); forbid("++");
            break;
        case ModelPreset::Free:
        case ModelPreset::Other:
            break;
    }
    return c;
}

ConstraintSet ConstraintSet::from_pairs(std::string_view pairs) {
    std::vector<std::pair<int, int>> v;
    std::size_t i = 0;
    while (i < pairs.size()) {
        std::size_t j = pairs.find(',', i);
        if (j == std::string_view::npos) j = pairs.size();
        std::string_view p = pairs.substr(i, j - i);
        if (p.size() != 2) throw error("forbidden pair must be two characters: '" + std::string(p) + "'");
        v.emplace_back(digit_from_char(p[0]), digit_from_char(p[1]));
        i = j + 1;
    }
    return from_pairs(v);
}

ConstraintSet ConstraintSet::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    ConstraintSet c;
    c.tag_ = ModelPreset::Other;
    for (auto [a, b] : pairs) c.forbidden_[a][b] = true;
    // recognize presets so labels and closed forms stay available
    for (ModelPreset m : {ModelPreset::Free, ModelPreset::ModelI, ModelPreset::ModelII,
                          ModelPreset::ModelIII, ModelPreset::PxpSpin1}) {
        ConstraintSet p = preset(m);
        bool same = true;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (p.forbidden_[a][b] != c.forbidden_[a][b]) same = false;
        if (same) { c.tag_ = m; break; }
    }
    return c;
}

std::string ConstraintSet::label() const {
    if (tag_ != ModelPreset::Other) return std::string(pxp1::to_string(tag_));
    std::string s;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (forbidden_[a][b]) {
                if (!s.empty()) s += ',';
                s += kDigitChar[a];
                s += kDigitChar[b];
            }
    return s.empty() ? "free" : s;
}

bool ConstraintSet::reversal_symmetric() const {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (forbidden_[a][b] != forbidden_[b][a]) return false;
    return true;
}

std::array<std::array<std::uint64_t, 3>, 3> ConstraintSet::transfer_matrix() const {
    std::array<std::array<std::uint64_t, 3>, 3> t{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t[a][b] = forbidden_[a][b] ? 0u : 1u;
    return t;
}

bool ConstraintSet::operator==(const ConstraintSet& o) const {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (forbidden_[a][b] != o.forbidden_[a][b]) return false;
    return true;
}

namespace {

using U128 = unsigned __int128;
using Mat128 = std::array<std::array<U128, 3>, 3>;

U128 checked_mul(U128 a, U128 b) {
    if (a != 0 && b > std::numeric_limits<U128>::max() / a)
        throw std::overflow_error("transfer-matrix count overflow");
    return a * b;
}

Mat128 mat_mul(const Mat128& x, const Mat128& y) {
    Mat128 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (x[i][k] == 0) continue;
            for (int j = 0; j < 3; ++j) r[i][j] += checked_mul(x[i][k], y[k][j]);
        }
    return r;
}

Mat128 mat_pow(Mat128 base, int e) {
    Mat128 r{};
    for (int i = 0; i < 3; ++i) r[i][i] = 1;
    while (e > 0) {
        if (e & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t count_dimension(const ConstraintSet& constraint, int length, Boundary bc) {
    if (length < 1) throw error("count_dimension requires L >= 1");
    auto t64 = constraint.transfer_matrix();
    Mat128 t{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t[a][b] = t64[a][b];
    U128 total = 0;
    if (bc == Boundary::OBC) {
        Mat128 p = mat_pow(t, length - 1);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) total += p[a][b];
    } else {
        Mat128 p = mat_pow(t, length);
        for (int a = 0; a < 3; ++a) total += p[a][a];
    }
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("dimension exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

double closed_form_dimension(ModelPreset model, int length) {
    if (length < 1) throw error("closed_form_dimension requires L >= 1");
    const double L = length;
    if (model == ModelPreset::ModelII) {
        const double s3 = std::sqrt(3.0);
        return (std::pow(1.0 - s3, L) * (s3 - 2.0) + std::pow(1.0 + s3, L) * (s3 + 2.0)) / (2.0 * s3);
    }
    if (model == ModelPreset::ModelIII) {
        const double s2 = std::sqrt(2.0);
        return (std::pow(1.0 - s2, L + 1.0) + std::pow(1.0 + s2, L + 1.0)) / 2.0;
    }
    throw unsupported_model("no closed-form dimension for model " + std::string(to_string(model)));
}

ConstrainedBasis ConstrainedBasis::enumerate(const ConstraintSet& constraint, int length,
                                             Boundary bc, std::uint64_t budget) {
    if (length < 1 || length > 40) throw error("enumerate: L must be in [1, 40]");
    std::uint64_t expected = count_dimension(constraint, length, bc);
    if (expected > budget) throw length_too_large(expected, budget);

    ConstrainedBasis basis(constraint, length, bc);
    basis.codes_.reserve(expected);

    // Sites are placed from L-1 (most significant digit) down to 0, digits
    // ascending, so states come out in ascending code order. The bond
    // checked when placing site i is the ordered pair (site i, site i+1);
    // the PBC wrap bond (site L-1, site 0) is checked at the leaf.
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(length) + 1, 0);
    int pos = length - 1;
    int d = 0;
    const bool pbc = bc == Boundary::PBC;
    while (true) {
        if (d >= 3) {
            ++pos;
            if (pos == length) break;
            d = digits[static_cast<std::size_t>(pos)] + 1;
            continue;
        }
        bool ok = pos == length - 1 || constraint.allowed(d, digits[static_cast<std::size_t>(pos) + 1]);
        if (ok && pos == 0 && pbc) {
            const int last = length == 1 ? d : digits[static_cast<std::size_t>(length) - 1];
            ok = constraint.allowed(last, d);
        }
        if (!ok) {
            ++d;
            continue;
        }
        digits[static_cast<std::size_t>(pos)] = d;
        partial[static_cast<std::size_t>(pos)] =
            partial[static_cast<std::size_t>(pos) + 1] * 3 + static_cast<std::uint64_t>(d);
        if (pos == 0) {
            basis.codes_.push_back(partial[0]);
            ++d;
        } else {
            --pos;
            d = 0;
        }
    }
    return basis;
}

std::int64_t ConstrainedBasis::index_of(std::uint64_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return -1;
    return static_cast<std::int64_t>(it - codes_.begin());
}

bool ConstrainedBasis::satisfies_constraints(std::uint64_t code) const {
    int prev = -1, first = -1;
    std::uint64_t c = code;
    for (int i = 0; i < length_; ++i) {
        int d = static_cast<int>(c % 3);
        c /= 3;
        if (i == 0)
            first = d;
        else if (constraint_.forbidden(prev, d))
            return false;
        prev = d;
    }
    if (bc_ == Boundary::PBC && constraint_.forbidden(prev, first)) return false;
    return true;
}

std::uint64_t translate_code(std::uint64_t code, int length) {
    const std::uint64_t top = pow3(length - 1);
    const std::uint64_t high = code / top;
    return (code - high * top) * 3 + high;
}

std::uint64_t invert_code(std::uint64_t code, int length, int axis_offset) {
    std::uint64_t out = 0;
    for (int i = 0; i < length; ++i) {
        int d = static_cast<int>(code % 3);
        code /= 3;
        int j = ((length - 1 - i + axis_offset) % length + length) % length;
        out += static_cast<std::uint64_t>(d) * pow3(j);
    }
    return out;
}

std::uint64_t ConstrainedBasis::translate(std::uint64_t code) const {
    return translate_code(code, length_);
}

std::uint64_t ConstrainedBasis::invert(std::uint64_t code, int axis_offset) const {
    return invert_code(code, length_, axis_offset);
}

void export_basis(std::ostream& os, const ConstrainedBasis& basis) {
    os << "# constraint=" << basis.constraint().label() << " L=" << basis.length()
       << " bc=" << to_string(basis.boundary()) << " dim=" << basis.dimension() << '\n';
    for (std::int64_t i = 0; i < basis.dimension(); ++i) os << basis.config(i).to_string() << '\n';
}

}  // namespace pxp1
