#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "agw/galois_field.hpp"

namespace agw {

// Parameters of an affine Grassmann code of a given level, together with all
// derived constants.  `rows` x `cols` is the shape of the generic matrix
// whose minors get evaluated; `level` caps the minor degree.
struct CodeParams {
    std::uint32_t q = 0;  // field order
    int rows = 0;         // rows of the generic matrix   (<= cols)
    int cols = 0;         // columns of the generic matrix
    int level = 0;        // maximal minor degree h, 1 <= level <= rows

    int m = 0;              // rows + cols
    int affine_dim = 0;     // rows * cols; the point space is GF(q)^affine_dim
    std::int64_t length = 0;  // q^affine_dim, the code length n
    int dim = 0;            // code dimension k = sum_{i<=level} C(rows,i)*C(cols,i)
    int max_initial_r = 0;  // 1 + max(rows, cols - rows), range of known initial weights
    int max_terminal_r = 0; // cols + 1, range of known terminal weights

    std::shared_ptr<const FieldSpec> field;

    const FieldSpec& F() const { return *field; }
};

// Validates 1 <= h <= rows <= cols, builds the field, and populates every
// derived constant.  Throws BadShape, Overflow (q^affine_dim beyond int64),
// or whatever field_from_order throws.
CodeParams code_params(std::uint32_t q, int rows, int cols, int level);

// A minor of the generic matrix, identified by strictly increasing 0-based
// row and column subsets of equal size.  Both empty = the constant minor 1.
struct MinorIndex {
    std::vector<int> row_set;
    std::vector<int> col_set;

    int degree() const { return static_cast<int>(row_set.size()); }
    bool operator==(const MinorIndex&) const = default;
};

// A point of the affine space: one rows x cols matrix over GF(q), stored
// row-major, plus its position in the fixed point ordering.
struct MatrixPoint {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> entries;  // row-major, entries[i*cols + j]
    std::int64_t index = 0;

    Elem at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

// The ordered basis N_1..N_k of minors of degree <= level.  Layout (0-based
// positions in the returned vector):
//   [0, k-affine_dim-2]   minors of degree >= 2, by degree descending then
//                         lexicographic on (row_set, col_set);
//   [k-affine_dim-1, k-2] the 1x1 minors, X_{rows,cols} first and X_{1,1}
//                         last, i.e. entry (i,j) sits at k-2 - (i*cols + j);
//   [k-1]                 the constant minor 1.
std::vector<MinorIndex> minor_basis(const CodeParams& params);

// Fixed bijection between 0..n-1 and points: the index is the base-q integer
// whose digits are the matrix entries read row-major, entry (0,0) most
// significant.  Throws OutOfRange.
MatrixPoint point_from_index(std::int64_t index, const CodeParams& params);
std::int64_t index_of_point(const MatrixPoint& point, const CodeParams& params);

// Determinant over GF(q) of the submatrix selected by `minor`, by Gaussian
// elimination with first-nonzero pivoting; the empty minor evaluates to 1.
// Throws ShapeMismatch if the minor does not fit inside the point.
Elem evaluate_minor(const MinorIndex& minor, const MatrixPoint& point, const FieldSpec& F);

// Same, reading the matrix entries from a raw row-major span (hot path for
// exhaustive scans; no shape checks).
Elem evaluate_minor_at(const MinorIndex& minor, std::span<const Elem> entries, int cols,
                       const FieldSpec& F);

// Row/column selection for the two close-minor families: `row_set` has
// exactly `level` rows; `col_set` has level+r-1 columns for family A and
// level+1 columns for family B.  Defaults to the top-left corner.
struct SubmatrixChoice {
    std::vector<int> row_set;
    std::vector<int> col_set;
};

// Family A: r minors inside a level x (level+r-1) submatrix Y, the j-th
// using Y's first level-1 columns plus Y's (level+j-1)-th column (1-based j).
// Requires 1 <= r <= cols - level + 1.
std::vector<MinorIndex> lemma_family_A(const CodeParams& params, int r,
                                       const std::optional<SubmatrixChoice>& Y = std::nullopt);

// Family B: r minors inside a level x (level+1) submatrix Y, the j-th
// omitting Y's (level-r+j+1)-th column (1-based j).  Requires level < cols
// and 1 <= r <= level + 1.
std::vector<MinorIndex> lemma_family_B(const CodeParams& params, int r,
                                       const std::optional<SubmatrixChoice>& Y = std::nullopt);

// Exhaustive count of points where every listed minor is nonzero.  The scan
// may be split across `workers` threads; the result is independent of the
// partitioning.  Throws BudgetExceeded when n exceeds `budget` points.
std::int64_t count_nonvanishing(const std::vector<MinorIndex>& minors, const CodeParams& params,
                                std::uint64_t budget = (1ull << 24), int workers = 1);

// C(n, k) with overflow checking.
std::uint64_t binomial(int n, int k);

}  // namespace agw
