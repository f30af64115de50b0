#include "agw/minor_space.hpp"

#include <algorithm>
#include <thread>

namespace agw {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n-k+i) / i is exact at each step
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (result > UINT64_MAX / num) throw Overflow("binomial overflow");
        result = result * num / i;
    }
    return result;
}

CodeParams code_params(std::uint32_t q, int rows, int cols, int level) {
    if (!(1 <= level && level <= rows && rows <= cols))
        throw BadShape("need 1 <= level <= rows <= cols, got level=" + std::to_string(level) +
                       " rows=" + std::to_string(rows) + " cols=" + std::to_string(cols));

    CodeParams P;
    P.q = q;
    P.rows = rows;
    P.cols = cols;
    P.level = level;
    P.m = rows + cols;
    P.affine_dim = rows * cols;

    P.field = std::make_shared<const FieldSpec>(field_from_order(q));

    std::int64_t n = 1;
    for (int i = 0; i < P.affine_dim; ++i) {
        if (n > (INT64_MAX / 2) / q) throw Overflow("q^(rows*cols) exceeds the integer range");
        n *= q;
    }
    P.length = n;

    std::uint64_t k = 0;
    for (int i = 0; i <= level; ++i) k += binomial(rows, i) * binomial(cols, i);
    P.dim = static_cast<int>(k);

    P.max_initial_r = 1 + std::max(rows, cols - rows);
    P.max_terminal_r = cols + 1;
    return P;
}

namespace {

// All strictly increasing t-subsets of {0..limit-1}, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int limit, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(t);
    for (int i = 0; i < t; ++i) cur[i] = i;
    if (t == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int i = t - 1;
        while (i >= 0 && cur[i] == limit - t + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<MinorIndex> minor_basis(const CodeParams& params) {
    const int k = params.dim;
    const int delta = params.affine_dim;
    std::vector<MinorIndex> basis;
    basis.reserve(k);

    // Degree >= 2 block, degree descending then lexicographic.
    for (int t = params.level; t >= 2; --t) {
        auto row_subsets = subsets_of_size(params.rows, t);
        auto col_subsets = subsets_of_size(params.cols, t);
        for (const auto& rs : row_subsets)
            for (const auto& cs : col_subsets) basis.push_back(MinorIndex{rs, cs});
    }

    // 1x1 block: entry (i,j) at position k-2 - (i*cols + j), so fill the
    // block from its last cell backwards.
    std::vector<MinorIndex> singles(static_cast<std::size_t>(delta));
    for (int i = 0; i < params.rows; ++i)
        for (int j = 0; j < params.cols; ++j)
            singles[static_cast<std::size_t>(delta) - 1 - (static_cast<std::size_t>(i) * params.cols + j)] =
                MinorIndex{{i}, {j}};
    for (auto& s : singles) basis.push_back(std::move(s));

    basis.push_back(MinorIndex{{}, {}});  // the constant minor
    return basis;
}

MatrixPoint point_from_index(std::int64_t index, const CodeParams& params) {
    if (index < 0 || index >= params.length) throw OutOfRange("point index " + std::to_string(index));
    MatrixPoint P;
    P.rows = params.rows;
    P.cols = params.cols;
    P.index = index;
    P.entries.assign(static_cast<std::size_t>(params.affine_dim), 0);
    std::int64_t v = index;
    for (int f = params.affine_dim - 1; f >= 0; --f) {
        P.entries[static_cast<std::size_t>(f)] = static_cast<Elem>(v % params.q);
        v /= params.q;
    }
    return P;
}

std::int64_t index_of_point(const MatrixPoint& point, const CodeParams& params) {
    if (point.rows != params.rows || point.cols != params.cols)
        throw ShapeMismatch("point shape does not match params");
    std::int64_t v = 0;
    for (int f = 0; f < params.affine_dim; ++f) {
        Elem d = point.entries[static_cast<std::size_t>(f)];
        if (d >= params.q) throw OutOfRange("entry " + std::to_string(d) + " not in GF(q)");
        v = v * params.q + d;
    }
    return v;
}

Elem evaluate_minor_at(const MinorIndex& minor, std::span<const Elem> entries, int cols,
                       const FieldSpec& F) {
    const int t = minor.degree();
    if (t == 0) return 1;
    if (t == 1) return entries[static_cast<std::size_t>(minor.row_set[0]) * cols + minor.col_set[0]];

    // Copy the selected submatrix and eliminate.
    Elem a[8 * 8];
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            a[i * t + j] = entries[static_cast<std::size_t>(minor.row_set[i]) * cols + minor.col_set[j]];

    Elem det = 1;
    bool negate = false;
    for (int c = 0; c < t; ++c) {
        int pivot = -1;
        for (int r = c; r < t; ++r) {
            if (a[r * t + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = c; j < t; ++j) std::swap(a[pivot * t + j], a[c * t + j]);
            negate = !negate;
        }
        Elem pv = a[c * t + c];
        det = fq_mul(det, pv, F);
        Elem pv_inv = fq_inv(pv, F);
        for (int r = c + 1; r < t; ++r) {
            Elem factor = fq_mul(a[r * t + c], pv_inv, F);
            if (factor == 0) continue;
            for (int j = c; j < t; ++j)
                a[r * t + j] = fq_sub(a[r * t + j], fq_mul(factor, a[c * t + j], F), F);
        }
    }
    return negate ? fq_neg(det, F) : det;
}

Elem evaluate_minor(const MinorIndex& minor, const MatrixPoint& point, const FieldSpec& F) {
    const int t = minor.degree();
    if (static_cast<int>(minor.col_set.size()) != t)
        throw ShapeMismatch("minor row/column sets differ in size");
    if (t > point.rows || t > point.cols ||
        (t > 0 && (minor.row_set.back() >= point.rows || minor.col_set.back() >= point.cols)))
        throw ShapeMismatch("minor does not fit inside the point");
    if (t > 8) throw ShapeMismatch("minor degree beyond supported bound");
    return evaluate_minor_at(minor, point.entries, point.cols, F);
}

namespace {

SubmatrixChoice default_choice(int level, int y_cols) {
    SubmatrixChoice Y;
    Y.row_set.resize(level);
    Y.col_set.resize(y_cols);
    for (int i = 0; i < level; ++i) Y.row_set[i] = i;
    for (int j = 0; j < y_cols; ++j) Y.col_set[j] = j;
    return Y;
}

void check_choice(const SubmatrixChoice& Y, int level, int y_cols, const CodeParams& params) {
    if (static_cast<int>(Y.row_set.size()) != level || static_cast<int>(Y.col_set.size()) != y_cols)
        throw DomainViolation("submatrix choice has the wrong shape");
    auto strictly_increasing_below = [](const std::vector<int>& v, int bound) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= bound) return false;
            if (i > 0 && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!strictly_increasing_below(Y.row_set, params.rows) ||
        !strictly_increasing_below(Y.col_set, params.cols))
        throw DomainViolation("submatrix choice out of range");
}

}  // namespace

std::vector<MinorIndex> lemma_family_A(const CodeParams& params, int r,
                                       const std::optional<SubmatrixChoice>& Y_choice) {
    const int h = params.level;
    if (r < 1 || r > params.cols - h + 1)
        throw DomainViolation("family A needs 1 <= r <= cols - level + 1, got r=" + std::to_string(r));
    SubmatrixChoice Y = Y_choice ? *Y_choice : default_choice(h, h + r - 1);
    check_choice(Y, h, h + r - 1, params);

    std::vector<MinorIndex> family;
    family.reserve(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        MinorIndex M;
        M.row_set = Y.row_set;
        for (int c = 0; c < h - 1; ++c) M.col_set.push_back(Y.col_set[static_cast<std::size_t>(c)]);
        M.col_set.push_back(Y.col_set[static_cast<std::size_t>(h - 1 + j)]);
        std::sort(M.col_set.begin(), M.col_set.end());
        family.push_back(std::move(M));
    }
    return family;
}

std::vector<MinorIndex> lemma_family_B(const CodeParams& params, int r,
                                       const std::optional<SubmatrixChoice>& Y_choice) {
    const int h = params.level;
    if (h >= params.cols) throw DomainViolation("family B needs level < cols");
    if (r < 1 || r > h + 1)
        throw DomainViolation("family B needs 1 <= r <= level + 1, got r=" + std::to_string(r));
    SubmatrixChoice Y = Y_choice ? *Y_choice : default_choice(h, h + 1);
    check_choice(Y, h, h + 1, params);

    std::vector<MinorIndex> family;
    family.reserve(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        int omit = h - r + j + 1;  // 0-based position within Y's columns
        MinorIndex M;
        M.row_set = Y.row_set;
        for (int c = 0; c <= h; ++c)
            if (c != omit) M.col_set.push_back(Y.col_set[static_cast<std::size_t>(c)]);
        family.push_back(std::move(M));
    }
    return family;
}

namespace {

// Scans points [first, last) with a mixed-radix odometer over the entries
// (amortized O(1) per step) and counts those where all minors are nonzero.
std::int64_t count_range(const std::vector<MinorIndex>& minors, const CodeParams& params,
                         std::int64_t first, std::int64_t last) {
    const FieldSpec& F = params.F();
    std::vector<Elem> entries = point_from_index(first, params).entries;
    std::int64_t count = 0;
    for (std::int64_t idx = first; idx < last; ++idx) {
        bool all_nonzero = true;
        for (const auto& M : minors) {
            if (evaluate_minor_at(M, entries, params.cols, F) == 0) {
                all_nonzero = false;
                break;
            }
        }
        count += all_nonzero;
        // increment the base-q digits, least significant last
        for (int f = params.affine_dim - 1; f >= 0; --f) {
            if (++entries[static_cast<std::size_t>(f)] < params.q) break;
            entries[static_cast<std::size_t>(f)] = 0;
        }
    }
    return count;
}

}  // namespace

std::int64_t count_nonvanishing(const std::vector<MinorIndex>& minors, const CodeParams& params,
                                std::uint64_t budget, int workers) {
    if (static_cast<std::uint64_t>(params.length) > budget)
        throw BudgetExceeded(static_cast<std::uint64_t>(params.length), budget);
    for (const auto& M : minors)
        if (M.degree() > 0 &&
            (M.row_set.back() >= params.rows || M.col_set.back() >= params.cols))
            throw ShapeMismatch("minor does not fit the parameter shape");

    const std::int64_t n = params.length;
    if (workers <= 1 || n < 4096) return count_range(minors, params, 0, n);

    int w = std::min<int>(workers, 64);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(w), 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t) {
        std::int64_t first = n * t / w, last = n * (t + 1) / w;
        threads.emplace_back([&, t, first, last] { partial[static_cast<std::size_t>(t)] = count_range(minors, params, first, last); });
    }
    for (auto& th : threads) th.join();
    std::int64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

}  // namespace agw
