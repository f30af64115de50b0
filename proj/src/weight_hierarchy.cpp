#include "agw/weight_hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "agw/closed_forms.hpp"

namespace agw {

namespace {

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) v = mul_sat(v, base);
    return v;
}

bool next_combination(std::vector<int>& c, int limit) {
    const int r = static_cast<int>(c.size());
    int i = r - 1;
    while (i >= 0 && c[i] == limit - r + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace

std::uint64_t gaussian_binomial(int k, int r, std::uint32_t q) {
    if (r < 0 || r > k) return 0;
    if (k > 512) throw Overflow("gaussian_binomial: k too large");
    // [k r]_q = [k-1 r-1]_q + q^r [k-1 r]_q, saturating
    std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= k; ++i) {
        for (int j = std::min(i, r); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                add_sat(row[static_cast<std::size_t>(j - 1)],
                        mul_sat(pow_sat(q, j), row[static_cast<std::size_t>(j)]));
    }
    return row[static_cast<std::size_t>(r)];
}

void for_each_subspace(int k, int r, const FieldSpec& F, std::uint64_t budget,
                       const std::function<void(const FqMatrix&, const std::vector<int>&)>& fn) {
    if (r < 0 || r > k) throw DomainViolation("subspace dimension out of range");
    std::uint64_t total = gaussian_binomial(k, r, F.q);
    if (total > budget) throw BudgetExceeded(total, budget, "subspace enumeration");
    if (r == 0) {
        fn(FqMatrix(0, k), {});
        return;
    }

    const std::uint32_t q = F.q;
    std::vector<int> piv(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) piv[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
        for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;

        FqMatrix mat(r, k);
        for (int i = 0; i < r; ++i) mat.at(i, piv[static_cast<std::size_t>(i)]) = 1;

        // free positions, row-major; odometer runs the last one fastest
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
            for (int c = piv[static_cast<std::size_t>(i)] + 1; c < k; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)]) free_pos.emplace_back(i, c);

        std::vector<Elem> digits(free_pos.size(), 0);
        while (true) {
            fn(mat, piv);
            int t = static_cast<int>(free_pos.size()) - 1;
            while (t >= 0) {
                auto [fi, fc] = free_pos[static_cast<std::size_t>(t)];
                if (digits[static_cast<std::size_t>(t)] + 1u < q) {
                    mat.at(fi, fc) = ++digits[static_cast<std::size_t>(t)];
                    break;
                }
                digits[static_cast<std::size_t>(t)] = 0;
                mat.at(fi, fc) = 0;
                --t;
            }
            if (t < 0) break;
        }
    } while (next_combination(piv, k));
}

bool WeightHierarchy::complete() const {
    for (int r = 0; r <= k; ++r)
        if (!known(r)) return false;
    return true;
}

std::vector<std::int64_t> WeightHierarchy::e_sequence() const {
    if (!complete()) throw IncompleteHierarchy("e-sequence needs every d_r");
    std::vector<std::int64_t> e(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) e[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j)] - j;
    return e;
}

std::vector<std::int64_t> WeightHierarchy::f_sequence() const {
    if (!complete()) throw IncompleteHierarchy("f-sequence needs every d_r");
    std::vector<std::int64_t> f(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        f[static_cast<std::size_t>(j)] = n - j - d[static_cast<std::size_t>(k - j)];
    return f;
}

namespace {

// Support bitmasks of every codeword, indexed by the message integer
// sum c_i * q^(k-1-i).  Feasible only for moderate q^k; the exhaustive
// search degrades gracefully without it.
struct SupportTable {
    std::uint64_t msg_count = 0;
    int words = 0;
    std::vector<std::uint64_t> masks;

    const std::uint64_t* mask(std::uint64_t msg) const {
        return masks.data() + msg * static_cast<std::uint64_t>(words);
    }
};

constexpr std::uint64_t kTableMaxMessages = 1ull << 22;
constexpr std::uint64_t kTableMaxWords = 1ull << 23;

// Walks all messages in mixed-radix reflected Gray order, so each step
// changes one coefficient by +-1 and the codeword update touches only one
// generator row.  `on_visit(msg)` runs after the codeword state is current.
template <typename Visit>
void gray_walk(const LinearCode& code, std::vector<Elem>& word, Visit&& on_visit) {
    const FieldSpec& F = code.F();
    const std::uint32_t q = F.q;
    const int k = code.dim;
    const std::int64_t n = code.length;

    // nonzero entries per generator row
    std::vector<std::vector<std::pair<std::int64_t, Elem>>> supp(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto row = code.generator.row(i);
        for (std::int64_t j = 0; j < n; ++j)
            if (row[static_cast<std::size_t>(j)] != 0)
                supp[static_cast<std::size_t>(i)].emplace_back(j, row[static_cast<std::size_t>(j)]);
    }

    std::vector<std::uint64_t> place(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) place[static_cast<std::size_t>(i)] = pow_sat(q, k - 1 - i);

    std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
    std::vector<int> dir(static_cast<std::size_t>(k), +1);
    std::uint64_t msg = 0;

    while (true) {
        on_visit(msg);
        int i = k - 1;
        while (i >= 0) {
            int nd = static_cast<int>(digit[static_cast<std::size_t>(i)]) + dir[static_cast<std::size_t>(i)];
            if (nd >= 0 && nd < static_cast<int>(q)) break;
            dir[static_cast<std::size_t>(i)] = -dir[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0) break;
        const bool up = dir[static_cast<std::size_t>(i)] > 0;
        for (auto [pos, val] : supp[static_cast<std::size_t>(i)]) {
            Elem& w = word[static_cast<std::size_t>(pos)];
            w = up ? fq_add(w, val, F) : fq_sub(w, val, F);
        }
        digit[static_cast<std::size_t>(i)] += dir[static_cast<std::size_t>(i)];
        msg = up ? msg + place[static_cast<std::size_t>(i)] : msg - place[static_cast<std::size_t>(i)];
    }
}

std::optional<SupportTable> build_support_table(const LinearCode& code) {
    const std::uint32_t q = code.F().q;
    const int k = code.dim;
    const std::int64_t n = code.length;
    const std::uint64_t msgs = pow_sat(q, k);
    const int words = static_cast<int>((n + 63) / 64);
    if (msgs > kTableMaxMessages) return std::nullopt;
    if (mul_sat(msgs, static_cast<std::uint64_t>(words)) > kTableMaxWords) return std::nullopt;

    SupportTable T;
    T.msg_count = msgs;
    T.words = words;
    T.masks.assign(msgs * static_cast<std::uint64_t>(words), 0);

    if (q == 2) {
        // over GF(2) the packed codeword is its own support mask
        std::vector<std::uint64_t> packed(static_cast<std::size_t>(code.dim) * words, 0);
        for (int i = 0; i < k; ++i) {
            auto row = code.generator.row(i);
            for (std::int64_t j = 0; j < n; ++j)
                if (row[static_cast<std::size_t>(j)])
                    packed[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j >> 6)] |=
                        1ull << (j & 63);
        }
        std::vector<std::uint64_t> cur(static_cast<std::size_t>(words), 0);
        // Gray order over GF(2) messages: flip one row per step
        std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
        std::vector<int> dir(static_cast<std::size_t>(k), +1);
        std::uint64_t msg = 0;
        while (true) {
            std::copy(cur.begin(), cur.end(), T.masks.begin() + static_cast<std::ptrdiff_t>(msg * words));
            int i = k - 1;
            while (i >= 0) {
                int nd = static_cast<int>(digit[static_cast<std::size_t>(i)]) + dir[static_cast<std::size_t>(i)];
                if (nd >= 0 && nd < 2) break;
                dir[static_cast<std::size_t>(i)] = -dir[static_cast<std::size_t>(i)];
                --i;
            }
            if (i < 0) break;
            for (int w = 0; w < words; ++w)
                cur[static_cast<std::size_t>(w)] ^= packed[static_cast<std::size_t>(i) * words + w];
            digit[static_cast<std::size_t>(i)] += dir[static_cast<std::size_t>(i)];
            msg = dir[static_cast<std::size_t>(i)] > 0 ? msg + (1ull << (k - 1 - i)) : msg - (1ull << (k - 1 - i));
        }
        return T;
    }

    std::vector<Elem> word(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(words), 0);
    const LinearCode& c = code;
    // maintain the mask alongside the codeword
    std::vector<Elem> prev(static_cast<std::size_t>(n), 0);
    gray_walk(c, word, [&](std::uint64_t msg) {
        // refresh mask bits only where the word changed since the last visit
        for (std::int64_t j = 0; j < n; ++j) {
            Elem v = word[static_cast<std::size_t>(j)];
            if (v != prev[static_cast<std::size_t>(j)]) {
                std::uint64_t bit = 1ull << (j & 63);
                if (v)
                    cur[static_cast<std::size_t>(j >> 6)] |= bit;
                else
                    cur[static_cast<std::size_t>(j >> 6)] &= ~bit;
                prev[static_cast<std::size_t>(j)] = v;
            }
        }
        std::copy(cur.begin(), cur.end(), T.masks.begin() + static_cast<std::ptrdiff_t>(msg * words));
    });
    return T;
}

struct BestHit {
    std::int64_t weight = std::numeric_limits<std::int64_t>::max();
    std::uint64_t pattern_ord = UINT64_MAX;
    std::uint64_t step = UINT64_MAX;
    std::vector<int> pivots;
    std::vector<Elem> digits;

    bool beats(const BestHit& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (pattern_ord != o.pattern_ord) return pattern_ord < o.pattern_ord;
        return step < o.step;
    }
};

// Scans every RREF matrix with the given pivot pattern, looking codeword
// supports up in the table; one odometer step changes one row's message.
void scan_pattern(const SupportTable& T, int k, std::uint32_t q, const std::vector<int>& piv,
                  std::uint64_t pattern_ord, BestHit& best) {
    const int r = static_cast<int>(piv.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::uint64_t> place(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) place[static_cast<std::size_t>(c)] = pow_sat(q, k - 1 - c);

    std::vector<int> frow, fcol;
    for (int i = 0; i < r; ++i)
        for (int c = piv[static_cast<std::size_t>(i)] + 1; c < k; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) {
                frow.push_back(i);
                fcol.push_back(c);
            }
    const int fcount = static_cast<int>(frow.size());

    std::vector<std::uint64_t> row_msg(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) row_msg[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)]]);

    std::vector<Elem> digits(static_cast<std::size_t>(fcount), 0);
    std::uint64_t step = 0;
    const int words = T.words;

    while (true) {
        std::int64_t w;
        if (words == 1) {
            std::uint64_t m = 0;
            for (int i = 0; i < r; ++i) m |= *T.mask(row_msg[static_cast<std::size_t>(i)]);
            w = std::popcount(m);
        } else {
            std::int64_t acc = 0;
            for (int wd = 0; wd < words; ++wd) {
                std::uint64_t m = 0;
                for (int i = 0; i < r; ++i) m |= T.mask(row_msg[static_cast<std::size_t>(i)])[wd];
                acc += std::popcount(m);
            }
            w = acc;
        }
        if (w < best.weight) {
            best.weight = w;
            best.pattern_ord = pattern_ord;
            best.step = step;
            best.pivots = piv;
            best.digits = digits;
        }
        int t = fcount - 1;
        while (t >= 0) {
            std::size_t ti = static_cast<std::size_t>(t);
            if (digits[ti] + 1u < q) {
                ++digits[ti];
                row_msg[static_cast<std::size_t>(frow[ti])] += place[static_cast<std::size_t>(fcol[ti])];
                break;
            }
            row_msg[static_cast<std::size_t>(frow[ti])] -=
                static_cast<std::uint64_t>(digits[ti]) * place[static_cast<std::size_t>(fcol[ti])];
            digits[ti] = 0;
            --t;
        }
        if (t < 0) break;
        ++step;
    }
}

Subcode subcode_from_hit(const BestHit& hit, int k) {
    const int r = static_cast<int>(hit.pivots.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
    for (int p : hit.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    FqMatrix mat(r, k);
    for (int i = 0; i < r; ++i) mat.at(i, hit.pivots[static_cast<std::size_t>(i)]) = 1;
    std::size_t t = 0;
    for (int i = 0; i < r; ++i)
        for (int c = hit.pivots[static_cast<std::size_t>(i)] + 1; c < k; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) mat.at(i, c) = hit.digits[t++];
    Subcode D;
    D.parent_dim = k;
    D.rank = r;
    D.coeffs = std::move(mat);
    D.pivots = hit.pivots;
    return D;
}

// Minimum nonzero-codeword weight without a support table: one Gray pass
// over all messages, maintaining the nonzero-position count.  The witness is
// the canonical representative (leading coefficient 1) that comes first in
// subspace enumeration order, i.e. smallest (pivot, trailing digits).
DrResult min_weight_gray(const LinearCode& code) {
    const FieldSpec& F = code.F();
    const int k = code.dim;
    const std::int64_t n = code.length;
    const std::uint32_t q = F.q;

    std::vector<Elem> word(static_cast<std::size_t>(n), 0);
    std::int64_t nnz = 0;
    std::vector<Elem> prev(static_cast<std::size_t>(n), 0);

    std::int64_t best_w = std::numeric_limits<std::int64_t>::max();
    std::vector<Elem> best_rep;

    std::vector<std::uint64_t> place(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) place[static_cast<std::size_t>(i)] = pow_sat(q, k - 1 - i);

    auto rep_of = [&](std::uint64_t msg) {
        std::vector<Elem> v(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<Elem>(msg / place[static_cast<std::size_t>(i)]);
            msg %= place[static_cast<std::size_t>(i)];
        }
        int p = 0;
        while (v[static_cast<std::size_t>(p)] == 0) ++p;
        Elem inv = fq_inv(v[static_cast<std::size_t>(p)], F);
        for (int i = p; i < k; ++i) v[static_cast<std::size_t>(i)] = fq_mul(v[static_cast<std::size_t>(i)], inv, F);
        return v;
    };
    auto canon_less = [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
        auto pivot = [](const std::vector<Elem>& v) {
            std::size_t p = 0;
            while (p < v.size() && v[p] == 0) ++p;
            return p;
        };
        std::size_t pa = pivot(a), pb = pivot(b);
        if (pa != pb) return pa < pb;
        return std::lexicographical_compare(a.begin() + static_cast<std::ptrdiff_t>(pa) + 1, a.end(),
                                            b.begin() + static_cast<std::ptrdiff_t>(pb) + 1, b.end());
    };

    gray_walk(code, word, [&](std::uint64_t msg) {
        for (std::int64_t j = 0; j < n; ++j) {
            Elem v = word[static_cast<std::size_t>(j)];
            Elem pv = prev[static_cast<std::size_t>(j)];
            if (v != pv) {
                nnz += (v != 0) - (pv != 0);
                prev[static_cast<std::size_t>(j)] = v;
            }
        }
        if (msg == 0) return;
        if (nnz < best_w) {
            best_w = nnz;
            best_rep = rep_of(msg);
        } else if (nnz == best_w) {
            std::vector<Elem> rep = rep_of(msg);
            if (canon_less(rep, best_rep)) best_rep = std::move(rep);
        }
    });

    DrResult out;
    out.weight = best_w;
    FqMatrix mat(1, k);
    for (int i = 0; i < k; ++i) mat.at(0, i) = best_rep[static_cast<std::size_t>(i)];
    out.witness = subcode_from_rows(std::move(mat), F);
    return out;
}

// Fallback without a support table: canonical enumeration with column-wise
// support accumulation, abandoning a subspace once it cannot beat the best.
DrResult exact_dr_scan(const LinearCode& code, int r, std::uint64_t budget) {
    const FieldSpec& F = code.F();
    const int k = code.dim;
    const std::int64_t n = code.length;

    BestHit best;
    FqMatrix best_mat;
    std::vector<int> best_piv;
    std::uint64_t ord = 0;
    std::int64_t best_w = std::numeric_limits<std::int64_t>::max();

    for_each_subspace(k, r, F, budget, [&](const FqMatrix& mat, const std::vector<int>& piv) {
        std::int64_t w = 0;
        for (std::int64_t j = 0; j < n && w < best_w; ++j) {
            bool nonzero = false;
            for (int i = 0; i < r && !nonzero; ++i) {
                Elem acc = 0;
                for (int c = 0; c < k; ++c) {
                    Elem coeff = mat.at(i, c);
                    if (coeff)
                        acc = fq_add(acc, fq_mul(coeff, code.generator.at(c, static_cast<int>(j)), F), F);
                }
                nonzero = acc != 0;
            }
            w += nonzero;
        }
        if (w < best_w) {
            best_w = w;
            best_mat = mat;
            best_piv = piv;
        }
        ++ord;
    });

    DrResult out;
    out.weight = best_w;
    out.witness.parent_dim = k;
    out.witness.rank = r;
    out.witness.coeffs = std::move(best_mat);
    out.witness.pivots = std::move(best_piv);
    return out;
}

DrResult exact_dr_impl(const LinearCode& code, int r, std::uint64_t budget, int workers,
                       const SupportTable* table) {
    const int k = code.dim;
    if (r < 0 || r > k)
        throw DomainViolation("d_r is defined for 0 <= r <= k, got r=" + std::to_string(r));
    if (r == 0) {
        DrResult out;
        out.weight = 0;
        out.witness.parent_dim = k;
        return out;
    }

    const std::uint32_t q = code.F().q;
    std::uint64_t total = gaussian_binomial(k, r, q);
    if (total > budget) throw BudgetExceeded(total, budget, "exact d_" + std::to_string(r));

    std::optional<SupportTable> local;
    if (!table) {
        local = build_support_table(code);
        table = local ? &*local : nullptr;
    }
    if (!table) {
        if (r == 1) return min_weight_gray(code);
        return exact_dr_scan(code, r, budget);
    }

    // enumerate pivot patterns, optionally in parallel
    std::vector<std::vector<int>> patterns;
    {
        std::vector<int> piv(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) piv[static_cast<std::size_t>(i)] = i;
        do patterns.push_back(piv);
        while (next_combination(piv, k));
    }

    const int w = std::max(1, std::min<int>(workers, static_cast<int>(patterns.size())));
    std::vector<BestHit> hits(static_cast<std::size_t>(w));
    auto run = [&](int worker) {
        for (std::size_t ord = static_cast<std::size_t>(worker); ord < patterns.size(); ord += static_cast<std::size_t>(w))
            scan_pattern(*table, k, q, patterns[ord], ord, hits[static_cast<std::size_t>(worker)]);
    };
    if (w == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < w; ++t) threads.emplace_back(run, t);
        for (auto& th : threads) th.join();
    }

    BestHit best;
    for (const auto& h : hits)
        if (h.beats(best)) best = h;

    DrResult out;
    out.weight = best.weight;
    out.witness = subcode_from_hit(best, k);
    return out;
}

}  // namespace

DrResult exact_dr_witness(const LinearCode& code, int r, std::uint64_t budget, int workers) {
    return exact_dr_impl(code, r, budget, workers, nullptr);
}

std::int64_t exact_dr(const LinearCode& code, int r, std::uint64_t budget, int workers) {
    return exact_dr_impl(code, r, budget, workers, nullptr).weight;
}

WeightHierarchy exact_hierarchy(const LinearCode& code, std::uint64_t budget, int workers) {
    WeightHierarchy H(code.length, code.dim);
    std::optional<SupportTable> table = build_support_table(code);
    for (int r = 1; r <= code.dim; ++r) {
        try {
            H.d[static_cast<std::size_t>(r)] =
                exact_dr_impl(code, r, budget, workers, table ? &*table : nullptr).weight;
        } catch (const BudgetExceeded& e) {
            throw BudgetExceeded(e.required, e.budget, "exact hierarchy stops at d_" + std::to_string(r));
        }
        H.status[static_cast<std::size_t>(r)] = WeightHierarchy::Status::Exact;
    }
    return H;
}

std::pair<Subcode, std::int64_t> witness_initial(const CodeParams& params, int r) {
    const int h = params.level;
    const int bound = std::max(params.cols - h, h) + 1;
    if (r < 1 || r > bound)
        throw DomainViolation("initial witness needs 1 <= r <= " + std::to_string(bound));
    if (params.cols <= 2 * h && h >= params.cols)
        throw DomainViolation("initial witness needs level < cols when cols <= 2*level");

    std::vector<MinorIndex> family = r <= params.cols - h + 1 ? lemma_family_A(params, r)
                                                              : lemma_family_B(params, r);

    // positions of the family minors in the ordered basis -> unit rows
    const auto basis = minor_basis(params);
    FqMatrix rows(r, params.dim);
    for (int i = 0; i < r; ++i) {
        auto it = std::find(basis.begin(), basis.end(), family[static_cast<std::size_t>(i)]);
        rows.at(i, static_cast<int>(it - basis.begin())) = 1;
    }
    Subcode D = subcode_from_rows(std::move(rows), params.F());
    if (D.rank != r) throw RankDeficient("close-family minors are not independent");

    // |A_1 u ... u A_r| over all points
    const FieldSpec& F = params.F();
    std::vector<Elem> entries(static_cast<std::size_t>(params.affine_dim), 0);
    std::int64_t weight = 0;
    for (std::int64_t idx = 0; idx < params.length; ++idx) {
        for (const auto& M : family) {
            if (evaluate_minor_at(M, entries, params.cols, F) != 0) {
                ++weight;
                break;
            }
        }
        for (int f = params.affine_dim - 1; f >= 0; --f) {
            if (++entries[static_cast<std::size_t>(f)] < params.q) break;
            entries[static_cast<std::size_t>(f)] = 0;
        }
    }

    if (weight != static_cast<std::int64_t>(initial_dr_formula(params, r)))
        throw RankDeficient("close-family support weight disagrees with the closed form");
    return {std::move(D), weight};
}

std::pair<Subcode, std::int64_t> witness_terminal(const CodeParams& params, int r) {
    if (r < 1 || r > params.cols + 1)
        throw DomainViolation("terminal witness needs 1 <= r <= cols + 1");
    const int span = params.dim - r;

    FqMatrix rows(span, params.dim);
    for (int i = 0; i < span; ++i) rows.at(i, i) = 1;
    std::int64_t zeros = zero_set_count(rows, params);

    std::int64_t expected = 1;
    for (int i = 0; i < r - 1; ++i) expected *= params.q;
    if (zeros != expected)
        throw RankDeficient("terminal witness zero set has unexpected size");

    Subcode D = subcode_from_rows(std::move(rows), params.F());
    return {std::move(D), params.length - zeros};
}

namespace {

std::int64_t zero_count_range(const FqMatrix& W, const CodeParams& params,
                              const std::vector<MinorIndex>& basis, const std::vector<int>& used,
                              std::int64_t first, std::int64_t last) {
    const FieldSpec& F = params.F();
    std::vector<Elem> entries = point_from_index(first, params).entries;
    std::vector<Elem> vals(static_cast<std::size_t>(params.dim), 0);
    std::int64_t count = 0;
    for (std::int64_t idx = first; idx < last; ++idx) {
        for (int c : used)
            vals[static_cast<std::size_t>(c)] =
                evaluate_minor_at(basis[static_cast<std::size_t>(c)], entries, params.cols, F);
        bool all_zero = true;
        for (int i = 0; i < W.rows && all_zero; ++i) {
            Elem acc = 0;
            for (int c : used) {
                Elem coeff = W.at(i, c);
                if (coeff) acc = fq_add(acc, fq_mul(coeff, vals[static_cast<std::size_t>(c)], F), F);
            }
            all_zero = acc == 0;
        }
        count += all_zero;
        for (int f = params.affine_dim - 1; f >= 0; --f) {
            if (++entries[static_cast<std::size_t>(f)] < params.q) break;
            entries[static_cast<std::size_t>(f)] = 0;
        }
    }
    return count;
}

}  // namespace

std::int64_t zero_set_count(const FqMatrix& W, const CodeParams& params, std::uint64_t budget,
                            int workers) {
    if (W.cols != params.dim)
        throw LengthMismatch("coefficient rows must have one column per basis minor");
    if (static_cast<std::uint64_t>(params.length) > budget)
        throw BudgetExceeded(static_cast<std::uint64_t>(params.length), budget, "zero set scan");

    const auto basis = minor_basis(params);
    std::vector<int> used;
    for (int c = 0; c < W.cols; ++c) {
        for (int i = 0; i < W.rows; ++i) {
            if (W.at(i, c) != 0) {
                used.push_back(c);
                break;
            }
        }
    }

    const std::int64_t n = params.length;
    if (workers <= 1 || n < 4096) return zero_count_range(W, params, basis, used, 0, n);

    int w = std::min(workers, 64);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(w), 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t) {
        std::int64_t first = n * t / w, last = n * (t + 1) / w;
        threads.emplace_back([&, t, first, last] {
            partial[static_cast<std::size_t>(t)] = zero_count_range(W, params, basis, used, first, last);
        });
    }
    for (auto& th : threads) th.join();
    std::int64_t total = 0;
    for (auto c : partial) total += c;
    return total;
}

}  // namespace agw
