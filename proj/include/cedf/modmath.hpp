#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cedf {

using i64 = std::int64_t;

// Least nonnegative representative of x modulo v.
i64 mod_reduce(i64 x, i64 v);
i64 mod_add(i64 a, i64 b, i64 v);
i64 mod_sub(i64 a, i64 b, i64 v);
i64 mod_mul(i64 a, i64 b, i64 v);
i64 mod_pow(i64 base, i64 exp, i64 v);

// Inverse of u modulo v; throws std::domain_error unless gcd(u, v) = 1.
i64 mod_inverse(i64 u, i64 v);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(i64 n);

/// An element of Z_v kept in canonical form, value in [0, v-1].
struct Residue {
    i64 value;
    i64 modulus;

    Residue(i64 x, i64 v);

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    bool operator==(const Residue& o) const = default;

    Residue pow(i64 e) const;
    Residue inverse() const;
};

/// The arithmetic progression {x, x+d, ..., y}; empty when x > y.
/// Requires x = y (mod d) when nonempty.
struct IntervalSet {
    i64 x;
    i64 y;
    i64 d;

    IntervalSet(i64 x, i64 y, i64 d = 1);

    bool empty() const { return x > y; }
    i64 size() const { return empty() ? 0 : (y - x) / d + 1; }
    std::vector<i64> values() const;
};

// Convenience form of IntervalSet::values().
std::vector<i64> interval(i64 x, i64 y, i64 d = 1);

/// The prime field F_q. Construction checks primality and throws
/// std::invalid_argument("unsupported field") otherwise.
struct PrimeField {
    i64 q;

    explicit PrimeField(i64 q);

    Residue element(i64 x) const { return Residue(x, q); }
};

// Order of a in the multiplicative group mod q (q prime, a nonzero).
i64 multiplicative_order(i64 a, i64 q);

// Smallest generator of F_q*, searched ascending from 2.
Residue find_primitive_element(i64 q);

// The cyclic subgroup <beta> of F_q*, returned sorted ascending.
std::vector<i64> subgroup(i64 beta, i64 q);

}  // namespace cedf
