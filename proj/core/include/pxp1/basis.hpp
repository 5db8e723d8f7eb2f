#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pxp1/errors.hpp"

namespace pxp1 {

// Local spin-1 states are base-3 digits: 0 <-> |->, 1 <-> |0>, 2 <-> |+>.
// Site i of a chain occupies digit i of the packed code; site 0 is the
// leftmost site and the least significant digit, so ascending code order
// is the canonical basis order.
inline constexpr int kLocalDim = 3;
inline constexpr char kDigitChar[3] = {'-', '0', '+'};

int digit_from_char(char c);

enum class Boundary { OBC, PBC };

std::string_view to_string(Boundary bc);
Boundary boundary_from_string(std::string_view s);

enum class ModelPreset { ModelI, ModelII, ModelIII, Free, PxpSpin1, Other };

std::string_view to_string(ModelPreset m);

/// One product configuration of a length-L chain.
struct SpinConfig {
    std::uint64_t code = 0;
    int length = 0;

    int digit(int site) const;
    /// Sum of S^z over all sites (each digit contributes digit - 1).
    int magnetization() const;
    std::string to_string() const;
    static SpinConfig from_string(std::string_view s);

    bool operator==(const SpinConfig&) const = default;
};

std::uint64_t pow3(int n);

/// Cyclic translation site i -> i+1 of a packed code.
std::uint64_t translate_code(std::uint64_t code, int length);
/// Reflection site i -> (L-1-i+axis_offset) mod L.
std::uint64_t invert_code(std::uint64_t code, int length, int axis_offset = 0);

/// Set of forbidden ordered nearest-neighbor pairs (a, b), a on site i and
/// b on site i+1. Defines a model.
class ConstraintSet {
  public:
    ConstraintSet();  // free: nothing forbidden

    static ConstraintSet preset(ModelPreset m);
    /// Parse "00,+0,0+" style pair lists.
    static ConstraintSet from_pairs(std::string_view pairs);
    static ConstraintSet from_pairs(const std::vector<std::pair<int, int>>& pairs);

    bool forbidden(int a, int b) const { return forbidden_[a][b]; }
    bool allowed(int a, int b) const { return !forbidden_[a][b]; }
    ModelPreset preset_tag() const { return tag_; }
    /// "I", "II", "III", "free", "pxp1" or the explicit pair list.
    std::string label() const;
    /// True iff forbidden(a,b) == forbidden(b,a) for all pairs; inversion
    /// symmetry of the chain requires this.
    bool reversal_symmetric() const;
    /// 3x3 transfer matrix, T[a][b] = allowed(a, b) ? 1 : 0.
    std::array<std::array<std::uint64_t, 3>, 3> transfer_matrix() const;

    bool operator==(const ConstraintSet&) const;

  private:
    bool forbidden_[3][3];
    ModelPreset tag_ = ModelPreset::Other;
};

/// All length-L configurations satisfying a ConstraintSet under a boundary
/// condition, sorted ascending by code. Immutable after construction.
class ConstrainedBasis {
  public:
    static constexpr std::uint64_t kDefaultBudget = 100'000'000;

    /// Depth-first enumeration with constraint pruning. Throws
    /// length_too_large if the (transfer-matrix) count exceeds the budget.
    static ConstrainedBasis enumerate(const ConstraintSet& constraint, int length,
                                      Boundary bc,
                                      std::uint64_t budget = kDefaultBudget);

    std::int64_t dimension() const { return static_cast<std::int64_t>(codes_.size()); }
    int length() const { return length_; }
    Boundary boundary() const { return bc_; }
    const ConstraintSet& constraint() const { return constraint_; }

    std::uint64_t code(std::int64_t i) const { return codes_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint64_t>& codes() const { return codes_; }
    SpinConfig config(std::int64_t i) const { return {codes_[static_cast<std::size_t>(i)], length_}; }

    /// Position of a code in the basis, or -1 if absent.
    std::int64_t index_of(std::uint64_t code) const;
    bool contains(std::uint64_t code) const { return index_of(code) >= 0; }

    /// True iff the configuration violates no forbidden pair under this
    /// basis' boundary condition (checks the raw code, not membership).
    bool satisfies_constraints(std::uint64_t code) const;

    /// Translation by one site (site i -> site i+1, cyclic). PBC concept;
    /// usable on any code of matching length.
    std::uint64_t translate(std::uint64_t code) const;
    /// Inversion site i -> (axis - i) mod L, default axis L-1.
    std::uint64_t invert(std::uint64_t code, int axis_offset = 0) const;

  private:
    ConstrainedBasis(ConstraintSet c, int length, Boundary bc)
        : constraint_(c), length_(length), bc_(bc) {}

    ConstraintSet constraint_;
    int length_;
    Boundary bc_;
    std::vector<std::uint64_t> codes_;
};

/// Exact dimension by 3x3 integer transfer-matrix power; never enumerates.
/// OBC: ones^T T^(L-1) ones, PBC: tr T^L. Throws std::overflow_error if the
/// count does not fit in 64 bits (far beyond any enumerable size).
std::uint64_t count_dimension(const ConstraintSet& constraint, int length, Boundary bc);

/// Table-1 closed forms, OBC only. Model-II:
/// ((1-sqrt3)^L (sqrt3-2) + (1+sqrt3)^L (sqrt3+2)) / (2 sqrt3);
/// Model-III: ((1-sqrt2)^(L+1) + (1+sqrt2)^(L+1)) / 2.
/// Throws unsupported_model for anything else (Model-I has no closed form,
/// only the cubic's asymptotics).
double closed_form_dimension(ModelPreset model, int length);

/// One state per line over {-,0,+} with a header
/// `# constraint=<name> L=<L> bc=<OBC|PBC> dim=<d>`.
void export_basis(std::ostream& os, const ConstrainedBasis& basis);

}  // namespace pxp1
