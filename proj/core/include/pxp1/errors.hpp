#pragma once

#include <stdexcept>
#include <string>

namespace pxp1 {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration would exceed the configured state budget.
struct length_too_large : error {
    length_too_large(std::uint64_t required, std::uint64_t budget)
        : error("basis enumeration needs " + std::to_string(required) +
                " states, budget is " + std::to_string(budget)),
          required_states(required), configured_budget(budget) {}
    std::uint64_t required_states;
    std::uint64_t configured_budget;
};

/// No closed-form dimension is available for the requested model.
struct unsupported_model : error {
    using error::error;
};

struct requires_pbc : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

/// Sector Hamiltonian requested at a momentum where phases are complex.
struct requires_real_sector : error {
    using error::error;
};

/// A +/- swap at one site left the constrained space.
struct flip_leaves_basis : error {
    using error::error;
};

struct too_large_for_full_spectrum : error {
    using error::error;
};

struct energy_out_of_range : error {
    using error::error;
};

struct length_too_small : error {
    using error::error;
};

/// FSA iteration hit beta_n = 0 before step 2L.
struct premature_annihilation : error {
    using error::error;
};

struct z2_not_in_basis : error {
    using error::error;
};

struct vectors_not_retained : error {
    using error::error;
};

struct method_infeasible : error {
    using error::error;
};

}  // namespace pxp1
