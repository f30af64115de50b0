#pragma once

#include <cstdint>
#include <vector>

#include "agw/errors.hpp"

namespace agw {

// A field element is its integer encoding: the base-p digits of the integer
// are the coefficients of the residue polynomial, least significant digit =
// constant term.  Elements of GF(q) are exactly 0..q-1; 0 and 1 encode the
// additive and multiplicative identities.
using Elem = std::uint16_t;

// Arithmetic description of GF(q) = GF(p^e).  Immutable after construction
// and safe to share across threads; all operations on it are pure.
struct FieldSpec {
    std::uint32_t q = 0;  // field order, q = p^e
    std::uint32_t p = 0;  // characteristic (prime)
    int e = 0;            // extension degree

    // Monic irreducible modulus of degree e over GF(p), constant term first
    // (size e+1, last entry 1).  Empty for prime fields (e == 1).
    std::vector<Elem> modulus;

    // Full operation tables, populated for q <= 256: mul[a*q+b] and inv[a].
    std::vector<Elem> mul_table;
    std::vector<Elem> inv_table;

    bool has_tables() const { return !mul_table.empty(); }
};

// Builds GF(q) with the lexicographically smallest monic irreducible modulus
// for the given (p, e), so two calls always produce identical fields.
// Throws NotAPrimePower if q is not a prime power, TooLarge if q > 2^16.
FieldSpec field_from_order(std::uint32_t q);

Elem fq_add(Elem a, Elem b, const FieldSpec& F);
Elem fq_neg(Elem a, const FieldSpec& F);
Elem fq_sub(Elem a, Elem b, const FieldSpec& F);
Elem fq_mul(Elem a, Elem b, const FieldSpec& F);

// Multiplicative inverse; throws DivisionByZero for a = 0.
Elem fq_inv(Elem a, const FieldSpec& F);
Elem fq_div(Elem a, Elem b, const FieldSpec& F);

// a^n by square-and-multiply; 0^0 = 1.
Elem fq_pow(Elem a, std::uint64_t n, const FieldSpec& F);

}  // namespace agw
