#include "pxp1/fragmentation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <queue>

#include "pxp1/symmetry.hpp"

namespace pxp1 {

std::vector<std::int64_t> FragmentDecomposition::size_histogram() const {
    std::vector<std::int64_t> sizes;
    sizes.reserve(components.size());
    for (const auto& c : components) sizes.push_back(static_cast<std::int64_t>(c.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::int64_t FragmentDecomposition::nth_largest(int n) const {
    std::vector<std::int64_t> order(components.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
        return components[static_cast<std::size_t>(a)].size() > components[static_cast<std::size_t>(b)].size();
    });
    return order.at(static_cast<std::size_t>(n));
}

FragmentDecomposition decompose(const SparseOperator& h) {
    FragmentDecomposition f;
    f.component_of.assign(static_cast<std::size_t>(h.dim), -1);
    std::vector<std::int64_t> queue;
    for (std::int64_t start = 0; start < h.dim; ++start) {
        if (f.component_of[static_cast<std::size_t>(start)] >= 0) continue;
        const auto id = static_cast<std::int32_t>(f.components.size());
        queue.clear();
        queue.push_back(start);
        f.component_of[static_cast<std::size_t>(start)] = id;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::int64_t u = queue[qi];
            for (std::int64_t k = h.row_ptr[u]; k < h.row_ptr[u + 1]; ++k) {
                const auto v = static_cast<std::int64_t>(h.col[static_cast<std::size_t>(k)]);
                if (v == u) continue;  // diagonal entries are not edges
                if (f.component_of[static_cast<std::size_t>(v)] < 0) {
                    f.component_of[static_cast<std::size_t>(v)] = id;
                    queue.push_back(v);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        f.components.push_back(queue);
    }
    return f;
}

std::pair<int, bool> component_motif_label(const ConstrainedBasis& basis,
                                           const std::vector<std::int64_t>& component,
                                           std::string_view motif) {
    assert(!component.empty());
    const int value = count_motif(basis.code(component.front()), basis.length(),
                                  basis.boundary(), motif);
    bool constant = true;
    for (std::int64_t i : component)
        if (count_motif(basis.code(i), basis.length(), basis.boundary(), motif) != value) {
            constant = false;
            break;
        }
    return {value, constant};
}

std::pair<int, bool> component_motif_label(const SymmetrySector& sector,
                                           const std::vector<std::int64_t>& component,
                                           std::string_view motif) {
    assert(!component.empty());
    const ConstrainedBasis& basis = sector.parent();
    const int value = count_motif(sector.representative(component.front()), basis.length(),
                                  basis.boundary(), motif);
    bool constant = true;
    for (std::int64_t v : component)
        if (count_motif(sector.representative(v), basis.length(), basis.boundary(), motif) !=
            value) {
            constant = false;
            break;
        }
    return {value, constant};
}

InertCensus enumerate_inert(const ConstraintSet& constraint, int length, Boundary bc,
                            bool keep_states) {
    ConstrainedBasis basis = ConstrainedBasis::enumerate(constraint, length, bc);
    InertCensus census{length, bc, 0, {}};
    for (std::int64_t i = 0; i < basis.dimension(); ++i) {
        bool active = false;
        for_each_flip(basis, basis.code(i), [&](int, int, std::uint64_t) { active = true; });
        if (!active) {
            ++census.count;
            if (keep_states) census.states.push_back(basis.code(i));
        }
    }
    return census;
}

namespace {

// Fib(1) = Fib(2) = 1; Lucas(1) = 1, Lucas(2) = 3.
void fib_lucas(int n, std::uint64_t& fib, std::uint64_t& lucas) {
    std::uint64_t f0 = 0, f1 = 1, l0 = 2, l1 = 1;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f2 = f0 + f1, l2 = l0 + l1;
        f0 = f1; f1 = f2;
        l0 = l1; l1 = l2;
    }
    fib = f0;
    lucas = l0;
}

}  // namespace

std::uint64_t inert_count_closed_form(int length, Boundary bc) {
    if (length < 1 || length > 85) throw error("inert_count_closed_form: L out of range");
    std::uint64_t fib = 0, lucas = 0;
    fib_lucas(length, fib, lucas);
    const int r = length % 4;
    const std::int64_t cos2 = r == 0 ? 2 : (r == 2 ? -2 : 0);          // 2 cos(pi L / 2)
    if (bc == Boundary::PBC)
        return static_cast<std::uint64_t>(static_cast<std::int64_t>(lucas) + cos2);
    const std::int64_t c4 = 2 * cos2;                                  // 4 cos(pi L / 2)
    const std::int64_t s8 = r == 1 ? 8 : (r == 3 ? -8 : 0);            // 8 sin(pi L / 2)
    const std::int64_t num = 3 * static_cast<std::int64_t>(lucas) +
                             5 * static_cast<std::int64_t>(fib) + c4 - s8;
    assert(num % 10 == 0);
    return static_cast<std::uint64_t>(num / 10);
}

std::uint64_t model2_sector_dimension(const std::vector<int>& labels, Boundary bc) {
    const int L = static_cast<int>(labels.size());
    for (int x : labels)
        if (x != 1 && x != -1) throw error("labels must be +-1");
    // Fib(n+2) linear spin-1/2 PXP strings of length n; Lucas(L) on a ring.
    auto pxp_linear = [](int n) {
        std::uint64_t fib = 0, lucas = 0;
        fib_lucas(n + 2, fib, lucas);
        return fib;
    };
    const bool all_plus = std::all_of(labels.begin(), labels.end(), [](int x) { return x == 1; });
    if (all_plus && bc == Boundary::PBC && L > 1) {
        std::uint64_t fib = 0, lucas = 0;
        fib_lucas(L, fib, lucas);
        return lucas;
    }
    std::uint64_t dim = 1;
    if (bc == Boundary::OBC || !all_plus) {
        int start = 0;
        if (bc == Boundary::PBC) {
            while (start < L && labels[static_cast<std::size_t>(start)] == 1) ++start;
            if (start == L) return pxp_linear(L);  // L == 1 ring, degenerate
        }
        int run = 0;
        for (int i = 0; i < L; ++i) {
            const int site = bc == Boundary::PBC ? (start + i) % L : i;
            if (labels[static_cast<std::size_t>(site)] == 1) {
                ++run;
            } else if (run > 0) {
                dim *= pxp_linear(run);
                run = 0;
            }
        }
        if (run > 0) dim *= pxp_linear(run);
    }
    return dim;
}

Model2Sector sector_decomposition_model2(const ConstrainedBasis& basis,
                                         const std::vector<int>& labels) {
    if (!(basis.constraint() == ConstraintSet::preset(ModelPreset::ModelII)))
        throw error("sector_decomposition_model2 requires a Model-II basis");
    const int L = basis.length();
    if (static_cast<int>(labels.size()) != L) throw dimension_mismatch("labels length != L");
    for (int x : labels)
        if (x != 1 && x != -1) throw error("labels must be +-1");
    const bool pbc = basis.boundary() == Boundary::PBC;

    Model2Sector sector;
    sector.labels = labels;

    // choice[i]: 0 = |O1+>, 1 = |O2+> (only on +1 sites), 2 = |O->
    std::vector<int> choice(static_cast<std::size_t>(L), 0);

    auto expand = [&]() {
        std::uint64_t pattern = 0;
        for (int i = 0; i < L; ++i)
            if (choice[static_cast<std::size_t>(i)] == 1) pattern |= 1ull << i;
        std::vector<std::pair<std::uint64_t, double>> terms{{0, 1.0}};
        for (int i = 0; i < L; ++i) {
            const std::uint64_t p3 = pow3(i);
            const int c = choice[static_cast<std::size_t>(i)];
            std::vector<std::pair<std::uint64_t, double>> next;
            next.reserve(terms.size() * 2);
            const double r = 1.0 / std::sqrt(2.0);
            for (auto [code, amp] : terms) {
                if (c == 1) {
                    next.emplace_back(code + p3, amp);
                } else {
                    next.emplace_back(code + 2 * p3, amp * r);
                    next.emplace_back(code, c == 0 ? amp * r : -amp * r);
                }
            }
            terms = std::move(next);
        }
        std::vector<std::pair<std::int64_t, double>> vec;
        vec.reserve(terms.size());
        for (auto [code, amp] : terms) {
            const std::int64_t idx = basis.index_of(code);
            assert(idx >= 0);
            vec.emplace_back(idx, amp);
        }
        std::sort(vec.begin(), vec.end());
        sector.pxp_patterns.push_back(pattern);
        sector.vectors.push_back(std::move(vec));
    };

    // depth-first over O1+/O2+ choices on +1 sites, no chain-adjacent O2+
    // pair (the wrap pair is checked at the leaf under PBC)
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == L) {
            if (pbc && L > 1 && choice[static_cast<std::size_t>(L) - 1] == 1 && choice[0] == 1)
                return;
            expand();
            return;
        }
        if (labels[static_cast<std::size_t>(pos)] == -1) {
            choice[static_cast<std::size_t>(pos)] = 2;
            self(self, pos + 1);
            return;
        }
        choice[static_cast<std::size_t>(pos)] = 0;
        self(self, pos + 1);
        if (pos == 0 || choice[static_cast<std::size_t>(pos) - 1] != 1) {
            choice[static_cast<std::size_t>(pos)] = 1;
            self(self, pos + 1);
            choice[static_cast<std::size_t>(pos)] = 0;
        }
    };
    rec(rec, 0);
    return sector;
}

std::vector<double> dense_subspace_matrix(
    const SparseOperator& h,
    const std::vector<std::vector<std::pair<std::int64_t, double>>>& vectors) {
    const auto n = static_cast<std::int64_t>(vectors.size());
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    std::vector<double> scratch(static_cast<std::size_t>(h.dim), 0.0);
    for (std::int64_t b = 0; b < n; ++b) {
        // scratch = H |vec_b>
        std::vector<std::int64_t> touched;
        for (auto [i, w] : vectors[static_cast<std::size_t>(b)])
            for (std::int64_t k = h.row_ptr[i]; k < h.row_ptr[i + 1]; ++k) {
                // H column i contributes to rows col[k]; H is hermitian so
                // rows and columns coincide
                const auto r = static_cast<std::int64_t>(h.col[static_cast<std::size_t>(k)]);
                if (scratch[static_cast<std::size_t>(r)] == 0.0) touched.push_back(r);
                scratch[static_cast<std::size_t>(r)] += h.val[static_cast<std::size_t>(k)] * w;
            }
        for (std::int64_t a = 0; a < n; ++a) {
            double acc = 0.0;
            for (auto [i, w] : vectors[static_cast<std::size_t>(a)])
                acc += scratch[static_cast<std::size_t>(i)] * w;
            m[static_cast<std::size_t>(a + b * n)] = acc;
        }
        for (auto r : touched) scratch[static_cast<std::size_t>(r)] = 0.0;
    }
    return m;
}

void export_fragment_census(std::ostream& os, const ConstrainedBasis& basis,
                            const FragmentDecomposition& frags) {
    struct Row {
        std::int64_t size;
        std::uint64_t min_code;
        int npp, nppp, nppmpp, nppmmpp;
    };
    std::vector<Row> rows;
    rows.reserve(frags.components.size());
    for (const auto& comp : frags.components) {
        Row r;
        r.size = static_cast<std::int64_t>(comp.size());
        r.min_code = basis.code(comp.front());
        r.npp = component_motif_label(basis, comp, "++").first;
        r.nppp = component_motif_label(basis, comp, "+++").first;
        r.nppmpp = component_motif_label(basis, comp, "++-++").first;
        r.nppmmpp = component_motif_label(basis, comp, "++--++").first;
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.size != b.size ? a.size > b.size : a.min_code < b.min_code;
    });
    os << "component_id,size,N_pp,N_ppp,extra_labels,min_code\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        os << i << ',' << rows[i].size << ',' << rows[i].npp << ',' << rows[i].nppp << ','
           << rows[i].nppmpp << ';' << rows[i].nppmmpp << ',' << rows[i].min_code << '\n';
}

}  // namespace pxp1
