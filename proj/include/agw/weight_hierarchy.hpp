#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "agw/linear_code.hpp"

namespace agw {

// Number of r-dimensional subspaces of GF(q)^k, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int k, int r, std::uint32_t q);

// Visits every r-dimensional subspace of GF(q)^k exactly once through its
// unique RREF basis, ordered by pivot-column pattern (combinations in
// lexicographic order) and then by free-entry values (odometer, last free
// position fastest).  The matrix passed to the callback is reused between
// calls; copy it to keep it.  Throws BudgetExceeded up front when the
// Gaussian binomial exceeds `budget`.
void for_each_subspace(int k, int r, const FieldSpec& F, std::uint64_t budget,
                       const std::function<void(const FqMatrix&, const std::vector<int>&)>& fn);

// The d_0..d_k sequence of a code, each entry flagged by how it was obtained.
struct WeightHierarchy {
    enum class Status : std::uint8_t { Unknown, Exact, Formula };

    std::int64_t n = 0;
    int k = 0;
    std::vector<std::int64_t> d;    // size k+1, d[0] = 0
    std::vector<Status> status;     // size k+1; status[0] is always Exact

    WeightHierarchy() = default;
    WeightHierarchy(std::int64_t n_, int k_)
        : n(n_), k(k_), d(static_cast<std::size_t>(k_) + 1, 0),
          status(static_cast<std::size_t>(k_) + 1, Status::Unknown) {
        status[0] = Status::Exact;
    }

    bool known(int r) const { return status[static_cast<std::size_t>(r)] != Status::Unknown; }
    bool complete() const;

    // e_j = d_j - j and f_j = n - j - d_{k-j}; both defined for complete
    // hierarchies of nondegenerate codes.
    std::vector<std::int64_t> e_sequence() const;
    std::vector<std::int64_t> f_sequence() const;
};

struct DrResult {
    std::int64_t weight = 0;
    Subcode witness;  // first minimizer in enumeration order
};

// Exact r-th higher weight: the minimum support weight over all
// r-dimensional subcodes, by exhaustive canonical enumeration.  The search
// may be partitioned across `workers` threads by pivot pattern; the result
// (witness included) does not depend on the worker count.
DrResult exact_dr_witness(const LinearCode& code, int r, std::uint64_t budget = 10'000'000,
                          int workers = 1);
std::int64_t exact_dr(const LinearCode& code, int r, std::uint64_t budget = 10'000'000,
                      int workers = 1);

// Exact d_r for every r = 0..k.  Throws BudgetExceeded naming the first
// infeasible r.
WeightHierarchy exact_hierarchy(const LinearCode& code, std::uint64_t budget = 10'000'000,
                                int workers = 1);

// The r-dimensional subspace spanned by a close family of minors (family A
// when r <= cols - level + 1, family B otherwise), in minor-basis
// coordinates, together with its support weight counted exhaustively over
// the point space.  Valid for r <= max(cols - level, level) + 1, requiring
// level < cols when cols <= 2*level; throws DomainViolation otherwise.
std::pair<Subcode, std::int64_t> witness_initial(const CodeParams& params, int r);

// The (k-r)-dimensional span of the first k-r basis minors, with its support
// weight n - |zero set| counted exhaustively; 1 <= r <= cols + 1.
std::pair<Subcode, std::int64_t> witness_terminal(const CodeParams& params, int r);

// Number of points where every row of W (coefficients over the minor basis)
// evaluates to zero.
std::int64_t zero_set_count(const FqMatrix& W, const CodeParams& params,
                            std::uint64_t budget = (1ull << 24), int workers = 1);

}  // namespace agw
