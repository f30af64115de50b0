#include "agw/galois_field.hpp"

#include <algorithm>

namespace agw {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_range(Elem a, const FieldSpec& F) {
    if (a >= F.q) throw OutOfRange("element " + std::to_string(a) + " not in GF(" + std::to_string(F.q) + ")");
}

// Polynomials over GF(p) are coefficient vectors, constant term first.
using Poly = std::vector<Elem>;

Poly poly_from_int(std::uint32_t v, std::uint32_t p, int min_len) {
    Poly c;
    while (v > 0) {
        c.push_back(static_cast<Elem>(v % p));
        v /= p;
    }
    while (static_cast<int>(c.size()) < min_len) c.push_back(0);
    return c;
}

std::uint32_t poly_to_int(const Poly& c, std::uint32_t p) {
    std::uint32_t v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
    return v;
}

int poly_deg(const Poly& c) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return -1;  // zero polynomial
}

// Remainder of a mod b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    int db = poly_deg(b);
    std::uint32_t lead_inv = 1;
    // inverse of b's leading coefficient mod p (Fermat)
    {
        std::uint32_t lead = b[db], acc = 1, base = lead, n = p - 2;
        while (n) {
            if (n & 1) acc = acc * base % p;
            base = base * base % p;
            n >>= 1;
        }
        lead_inv = acc;
    }
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        std::uint32_t factor = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            std::uint32_t t = static_cast<std::uint32_t>(b[i]) * factor % p;
            a[da - db + i] = static_cast<Elem>((a[da - db + i] + p - t) % p);
        }
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<Elem>((prod[i + j] + static_cast<std::uint32_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(prod), modulus, p);
}

// Irreducibility over GF(p) by trial division: f of degree e is reducible
// iff it has a monic factor of degree 1..e/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    int e = poly_deg(f);
    for (int d = 1; 2 * d <= e; ++d) {
        std::uint32_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;  // p^d monic candidates
        for (std::uint32_t v = 0; v < count; ++v) {
            Poly g = poly_from_int(v, p, d + 1);
            g[d] = 1;
            if (poly_deg(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

Elem mul_nocache(Elem a, Elem b, const FieldSpec& F) {
    if (F.e == 1) return static_cast<Elem>(static_cast<std::uint32_t>(a) * b % F.p);
    Poly pa = poly_from_int(a, F.p, F.e);
    Poly pb = poly_from_int(b, F.p, F.e);
    return static_cast<Elem>(poly_to_int(poly_mul_mod(pa, pb, F.modulus, F.p), F.p));
}

}  // namespace

FieldSpec field_from_order(std::uint32_t q) {
    if (q > (1u << 16)) throw TooLarge("field order " + std::to_string(q) + " exceeds 2^16");
    if (q < 2) throw NotAPrimePower("field order must be at least 2");

    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime

    int e = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw NotAPrimePower(std::to_string(q) + " has more than one prime factor");

    FieldSpec F;
    F.q = q;
    F.p = p;
    F.e = e;

    if (e > 1) {
        // Smallest monic irreducible x^e + (lower terms), scanning lower terms
        // in increasing integer encoding; deterministic across runs.
        for (std::uint32_t v = 0;; ++v) {
            Poly f = poly_from_int(v, p, e + 1);
            f[e] = 1;
            if (is_irreducible(f, p)) {
                F.modulus = std::move(f);
                break;
            }
        }
    }

    if (q <= 256) {
        F.mul_table.assign(static_cast<std::size_t>(q) * q, 0);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = a; b < q; ++b) {
                Elem m = mul_nocache(static_cast<Elem>(a), static_cast<Elem>(b), F);
                F.mul_table[a * q + b] = m;
                F.mul_table[b * q + a] = m;
            }
        F.inv_table.assign(q, 0);
        for (std::uint32_t a = 1; a < q; ++a) {
            for (std::uint32_t b = 1; b < q; ++b) {
                if (F.mul_table[a * q + b] == 1) {
                    F.inv_table[a] = static_cast<Elem>(b);
                    break;
                }
            }
        }
    }
    return F;
}

Elem fq_add(Elem a, Elem b, const FieldSpec& F) {
    check_range(a, F);
    check_range(b, F);
    if (F.e == 1) {
        std::uint32_t s = static_cast<std::uint32_t>(a) + b;
        return static_cast<Elem>(s >= F.p ? s - F.p : s);
    }
    if (F.p == 2) return a ^ b;
    // digit-wise sum mod p
    std::uint32_t result = 0, place = 1, x = a, y = b;
    while (x > 0 || y > 0) {
        std::uint32_t s = x % F.p + y % F.p;
        if (s >= F.p) s -= F.p;
        result += s * place;
        place *= F.p;
        x /= F.p;
        y /= F.p;
    }
    return static_cast<Elem>(result);
}

Elem fq_neg(Elem a, const FieldSpec& F) {
    check_range(a, F);
    if (F.p == 2) return a;
    if (F.e == 1) return static_cast<Elem>(a == 0 ? 0 : F.p - a);
    std::uint32_t result = 0, place = 1, x = a;
    while (x > 0) {
        std::uint32_t d = x % F.p;
        result += (d == 0 ? 0 : F.p - d) * place;
        place *= F.p;
        x /= F.p;
    }
    return static_cast<Elem>(result);
}

Elem fq_sub(Elem a, Elem b, const FieldSpec& F) { return fq_add(a, fq_neg(b, F), F); }

Elem fq_mul(Elem a, Elem b, const FieldSpec& F) {
    check_range(a, F);
    check_range(b, F);
    if (F.has_tables()) return F.mul_table[static_cast<std::size_t>(a) * F.q + b];
    return mul_nocache(a, b, F);
}

Elem fq_pow(Elem a, std::uint64_t n, const FieldSpec& F) {
    check_range(a, F);
    Elem result = 1, base = a;
    while (n) {
        if (n & 1) result = fq_mul(result, base, F);
        base = fq_mul(base, base, F);
        n >>= 1;
    }
    return result;
}

Elem fq_inv(Elem a, const FieldSpec& F) {
    check_range(a, F);
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(F.q) + ")");
    if (F.has_tables()) return F.inv_table[a];
    return fq_pow(a, F.q - 2, F);
}

Elem fq_div(Elem a, Elem b, const FieldSpec& F) { return fq_mul(a, fq_inv(b, F), F); }

}  // namespace agw
