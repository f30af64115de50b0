#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agw/minor_space.hpp"

namespace agw {

// Dense matrix over GF(q), row-major.
struct FqMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Elem at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::span<const Elem> row(int i) const {
        return {a.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)};
    }
    bool operator==(const FqMatrix&) const = default;
};

struct RrefResult {
    FqMatrix mat;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per row, strictly increasing
};

// Reduced row-echelon form over GF(q): pivots are 1 with zeros above and
// below, pivot columns strictly increasing.
RrefResult rref(FqMatrix mat, const FieldSpec& F);

struct LinearCode {
    std::shared_ptr<const FieldSpec> field;
    std::int64_t length = 0;  // n
    int dim = 0;              // k
    FqMatrix generator;       // k x n, rank k
    std::optional<CodeParams> provenance;  // set when built as an affine Grassmann code

    const FieldSpec& F() const { return *field; }
};

// A subspace of the message space GF(q)^k, held in canonical form: the
// coefficient matrix is in RREF, so equal subspaces compare equal.
struct Subcode {
    int parent_dim = 0;     // k of the parent code
    int rank = 0;           // r
    FqMatrix coeffs;        // r x k, RREF
    std::vector<int> pivots;

    bool operator==(const Subcode&) const = default;
};

Subcode subcode_from_rows(FqMatrix rows, const FieldSpec& F);

// Evaluates the ordered minor basis at every point: row i of the generator
// is (N_i(P_0), ..., N_i(P_{n-1})).  Verifies the matrix has full rank and
// throws RankDeficient otherwise.  Throws BudgetExceeded if n > budget.
LinearCode build_code(const CodeParams& params, std::uint64_t budget = (1ull << 24));

// Generator of the dual: the RREF-canonical basis of the null space of the
// primal generator.  A full-space code yields a zero-dimensional dual.
LinearCode dual_code(const LinearCode& code);

// coeffs * generator.  Throws LengthMismatch.
std::vector<Elem> encode(const std::vector<Elem>& coeffs, const LinearCode& code);

// Number of coordinates where some basis codeword of D is nonzero (the union
// of the basis rows' supports).
std::int64_t support_weight(const LinearCode& code, const Subcode& D);

// Self-describing JSON text record for a build artifact; load/store
// round-trips bit-exactly.  Requires affine Grassmann provenance.
std::string store_code(const LinearCode& code);
LinearCode load_code(const std::string& text);

}  // namespace agw
