#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agw/weight_hierarchy.hpp"

namespace agw {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Closed forms for the code itself.  The *_value functions take raw
// parameters and use exact big-integer arithmetic, so they stay valid for
// parameter sizes whose q^(rows*cols) cannot be materialized; the *_formula
// wrappers take validated CodeParams and return machine integers.
// ---------------------------------------------------------------------------

// Minimum distance q^(delta - h^2) * |GL_h(F_q)| with delta = rows*cols,
// h = level, |GL_h| = prod_{i<h} (q^h - q^i).
BigInt min_distance_value(std::uint32_t q, int rows, int cols, int level);
std::int64_t min_distance_formula(const CodeParams& params);

// r-th higher weight sum_{i<r} d/q^i on its validity domain:
// 1 <= r <= max(cols-level, level)+1, and level < cols whenever
// cols <= 2*level.  Throws DomainViolation outside it.
BigInt initial_dr_value(std::uint32_t q, int rows, int cols, int level, int r);
std::int64_t initial_dr_formula(const CodeParams& params, int r);

// d_{k-r} = q^delta - q^(r-1) for 1 <= r <= cols+1; r = 0 gives d_k = q^delta.
BigInt terminal_dr_value(std::uint32_t q, int rows, int cols, int level, int r);
std::int64_t terminal_dr_formula(const CodeParams& params, int r);

// Griesmer-Wei lower bound sum_{i<r} ceil(d1/q^i).
BigInt griesmer_wei_value(const BigInt& d1, int r, std::uint32_t q);
std::int64_t griesmer_wei(std::int64_t d1, int r, std::uint32_t q);

// Checks d_s >= d_r + sum_{i=1}^{s-r} ceil((q-1) d_r / ((q^r-1) q)) over all
// known pairs r <= s; returns the violating pairs (empty when the hierarchy
// is consistent).
struct TsfasmanVladutViolation {
    int r = 0;
    int s = 0;
    std::int64_t bound = 0;
    std::int64_t actual = 0;
};
std::vector<TsfasmanVladutViolation> tsfasman_vladut_check(const WeightHierarchy& hierarchy,
                                                           std::uint32_t q);

// ---------------------------------------------------------------------------
// Wei duality.
// ---------------------------------------------------------------------------

// Full dual hierarchy as the sorted complement {1..n} \ {n+1-d_r}.  Requires
// every primal entry; entries inherit Exact status only when the whole
// primal hierarchy is exact.
WeightHierarchy dual_hierarchy_from_primal(const WeightHierarchy& primal);

// Single-value lookups through the e- and f-sequences.  They tolerate
// partially known hierarchies as long as the entries bracketing s are known,
// and throw IncompleteHierarchy otherwise.
//   terminal: d_{n-k-s}(dual) = n - s - j  for the j < k with e_j <= s < e_{j+1}
//   initial:  d_s(dual)       = s + j + 1  for the j < k with f_j < s <= f_{j+1}
std::int64_t dual_terminal_via_e(const WeightHierarchy& primal, std::int64_t s);
std::int64_t dual_initial_via_f(const WeightHierarchy& primal, std::int64_t s);

// Initial dual weights d_s(dual) = s + j + 1, j in 1..cols picked by
// q^(j-1) - (j-1) <= s < q^j - j; valid for cols > 1 and 1 <= s < q^cols - cols.
// Only q, cols and s enter the formula, hence the scalar overload.
std::int64_t dual_initial_formula(std::uint32_t q, int cols, std::int64_t s);
std::int64_t dual_initial_formula(const CodeParams& params, std::int64_t s);

// Terminal dual weights d_{n-k-s}(dual).  For 0 <= s <= d-2 this is n - s.
// Beyond that the value is n - s - j with j picked by the e-sequence
// bracket H_j <= s < H_{j+1}, where H_j = sum_{i<j} d/q^i - j; the variant
// reading the index bracket as H_{j-1} <= s < H_j is kept for comparison
// and yields exactly one less everywhere in that range.
std::int64_t dual_terminal_formula(const CodeParams& params, std::int64_t s);
std::int64_t dual_terminal_formula_literal(const CodeParams& params, std::int64_t s);

// Initial dual weights by the recursion d_s = d_{s-1} + (2 if d_{s-1} is a
// power of q else 1), seeded by the direct formula at s = 1; returns values
// for s = 1..s_max.  Valid for cols > 1 and 2 <= s_max <= q^cols - cols.
std::vector<std::int64_t> dual_recursive(std::uint32_t q, int cols, std::int64_t s_max);
std::vector<std::int64_t> dual_recursive(const CodeParams& params, std::int64_t s_max);

// Upper bound d(l,2l;l) * (1 + q^(l-1)/(q^l - 1)) for the second higher
// weight of the full-level code on a square matrix.
BigInt conjecture_d2_value(int rows, std::uint32_t q);

// ---------------------------------------------------------------------------
// Reporting.
// ---------------------------------------------------------------------------

enum class DualMethod { DirectFormula, Recursive, DualityTransform };

// Dual weights over an s-range plus the auxiliary sequences driving the
// formulas: Q_j = q^j - j, G_j as the exact pair (1 + q + ... + q^(j-1),
// q^(j-1)) and H_j = d*G_j - j.
struct DualWeightReport {
    CodeParams params;
    std::int64_t s_first = 0;
    std::int64_t s_last = 0;
    std::vector<std::int64_t> values;
    std::vector<DualMethod> method;
    std::vector<std::int64_t> Q;                       // j = 0..cols
    std::vector<std::pair<BigInt, BigInt>> G;          // j = 0..max_initial_r
    std::vector<std::int64_t> H;                       // j = 0..max_initial_r
};
DualWeightReport dual_weight_report(const CodeParams& params, std::int64_t s_first,
                                    std::int64_t s_last, DualMethod mode);

// Grid of initial dual weights for parameters large enough that only q and s
// matter (each column uses the smallest cols with q^cols - cols > s_max).
struct DualWeightTable {
    std::vector<std::uint32_t> q_list;
    int s_max = 0;
    std::vector<std::vector<std::int64_t>> values;  // values[s-1][column]

    std::string to_csv() const;  // header row, comma separated, LF endings
};
DualWeightTable table1(const std::vector<std::uint32_t>& q_list, int s_max);

}  // namespace agw
