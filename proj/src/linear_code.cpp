#include "agw/linear_code.hpp"

#include <json.hpp>

namespace agw {

RrefResult rref(FqMatrix mat, const FieldSpec& F) {
    RrefResult out;
    const int rows = mat.rows, cols = mat.cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (mat.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(mat.at(pivot, j), mat.at(r, j));
        Elem inv = fq_inv(mat.at(r, c), F);
        for (int j = c; j < cols; ++j) mat.at(r, j) = fq_mul(mat.at(r, j), inv, F);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Elem factor = mat.at(i, c);
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j)
                mat.at(i, j) = fq_sub(mat.at(i, j), fq_mul(factor, mat.at(r, j), F), F);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(mat);
    return out;
}

Subcode subcode_from_rows(FqMatrix rows, const FieldSpec& F) {
    Subcode D;
    D.parent_dim = rows.cols;
    RrefResult rr = rref(std::move(rows), F);
    D.rank = rr.rank;
    D.pivots = rr.pivots;
    // drop all-zero rows so the stored matrix has exactly `rank` rows
    D.coeffs = FqMatrix(rr.rank, rr.mat.cols);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < rr.mat.cols; ++j) D.coeffs.at(i, j) = rr.mat.at(i, j);
    return D;
}

LinearCode build_code(const CodeParams& params, std::uint64_t budget) {
    if (static_cast<std::uint64_t>(params.length) > budget)
        throw BudgetExceeded(static_cast<std::uint64_t>(params.length), budget);

    const FieldSpec& F = params.F();
    const auto basis = minor_basis(params);
    const int k = params.dim;
    const std::int64_t n = params.length;

    LinearCode code;
    code.field = params.field;
    code.length = n;
    code.dim = k;
    code.provenance = params;
    code.generator = FqMatrix(k, static_cast<int>(n));

    std::vector<Elem> entries(static_cast<std::size_t>(params.affine_dim), 0);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        for (int i = 0; i < k; ++i)
            code.generator.a[static_cast<std::size_t>(i) * n + idx] =
                evaluate_minor_at(basis[static_cast<std::size_t>(i)], entries, params.cols, F);
        for (int f = params.affine_dim - 1; f >= 0; --f) {
            if (++entries[static_cast<std::size_t>(f)] < params.q) break;
            entries[static_cast<std::size_t>(f)] = 0;
        }
    }

    if (rref(code.generator, F).rank != k)
        throw RankDeficient("generator matrix of the evaluated minor basis is not full rank");
    return code;
}

LinearCode dual_code(const LinearCode& code) {
    const FieldSpec& F = code.F();
    const int n = static_cast<int>(code.length);
    RrefResult rr = rref(code.generator, F);
    const int k = rr.rank;

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    // One kernel vector per free column: 1 at the free column, minus the
    // pivot-row coefficients at the pivot columns.
    FqMatrix kernel(n - k, n);
    int row = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        kernel.at(row, f) = 1;
        for (int i = 0; i < k; ++i) kernel.at(row, rr.pivots[static_cast<std::size_t>(i)]) = fq_neg(rr.mat.at(i, f), F);
        ++row;
    }

    LinearCode dual;
    dual.field = code.field;
    dual.length = code.length;
    dual.dim = n - k;
    dual.generator = rref(std::move(kernel), F).mat;
    return dual;
}

std::vector<Elem> encode(const std::vector<Elem>& coeffs, const LinearCode& code) {
    if (static_cast<int>(coeffs.size()) != code.dim)
        throw LengthMismatch("expected " + std::to_string(code.dim) + " coefficients, got " +
                             std::to_string(coeffs.size()));
    const FieldSpec& F = code.F();
    std::vector<Elem> word(static_cast<std::size_t>(code.length), 0);
    for (int i = 0; i < code.dim; ++i) {
        Elem c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        auto row = code.generator.row(i);
        for (std::int64_t j = 0; j < code.length; ++j)
            word[static_cast<std::size_t>(j)] =
                fq_add(word[static_cast<std::size_t>(j)], fq_mul(c, row[static_cast<std::size_t>(j)], F), F);
    }
    return word;
}

std::int64_t support_weight(const LinearCode& code, const Subcode& D) {
    if (D.parent_dim != code.dim) throw LengthMismatch("subcode does not match the code dimension");
    std::vector<bool> covered(static_cast<std::size_t>(code.length), false);
    for (int i = 0; i < D.rank; ++i) {
        std::vector<Elem> coeffs(D.coeffs.row(i).begin(), D.coeffs.row(i).end());
        std::vector<Elem> word = encode(coeffs, code);
        for (std::int64_t j = 0; j < code.length; ++j)
            if (word[static_cast<std::size_t>(j)] != 0) covered[static_cast<std::size_t>(j)] = true;
    }
    std::int64_t weight = 0;
    for (bool b : covered) weight += b;
    return weight;
}

std::string store_code(const LinearCode& code) {
    if (!code.provenance) throw LengthMismatch("only affine Grassmann build artifacts are serializable");
    const CodeParams& P = *code.provenance;

    nlohmann::ordered_json j;
    j["q"] = P.q;
    j["modulus"] = P.F().modulus;  // empty for prime fields
    j["rows"] = P.rows;
    j["cols"] = P.cols;
    j["level"] = P.level;
    j["n"] = code.length;
    j["k"] = code.dim;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < code.dim; ++i) {
        auto r = code.generator.row(i);
        rows.push_back(std::vector<int>(r.begin(), r.end()));
    }
    j["generator"] = std::move(rows);
    return j.dump(2) + "\n";
}

LinearCode load_code(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    CodeParams P = code_params(j.at("q").get<std::uint32_t>(), j.at("rows").get<int>(),
                               j.at("cols").get<int>(), j.at("level").get<int>());
    if (!j.at("modulus").get<std::vector<Elem>>().empty() &&
        j.at("modulus").get<std::vector<Elem>>() != P.F().modulus)
        throw ShapeMismatch("stored modulus differs from the canonical modulus for this order");

    LinearCode code;
    code.field = P.field;
    code.length = j.at("n").get<std::int64_t>();
    code.dim = j.at("k").get<int>();
    if (code.length != P.length || code.dim != P.dim)
        throw ShapeMismatch("stored n/k do not match the stored parameters");
    code.provenance = P;
    code.generator = FqMatrix(code.dim, static_cast<int>(code.length));
    const auto& rows = j.at("generator");
    if (static_cast<int>(rows.size()) != code.dim) throw ShapeMismatch("stored generator has wrong row count");
    for (int i = 0; i < code.dim; ++i) {
        auto row = rows[static_cast<std::size_t>(i)].get<std::vector<int>>();
        if (static_cast<std::int64_t>(row.size()) != code.length)
            throw ShapeMismatch("stored generator has wrong row length");
        for (std::int64_t c = 0; c < code.length; ++c) {
            int v = row[static_cast<std::size_t>(c)];
            if (v < 0 || static_cast<std::uint32_t>(v) >= P.q) throw OutOfRange("stored element not in GF(q)");
            code.generator.at(i, static_cast<int>(c)) = static_cast<Elem>(v);
        }
    }
    return code;
}

}  // namespace agw
