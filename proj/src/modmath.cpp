#include "cedf/modmath.hpp"

#include <algorithm>
#include <numeric>

namespace cedf {

i64 mod_reduce(i64 x, i64 v) {
    if (v <= 0) throw std::invalid_argument("modulus must be positive");
    i64 r = x % v;
    return r < 0 ? r + v : r;
}

i64 mod_add(i64 a, i64 b, i64 v) { return mod_reduce(mod_reduce(a, v) + mod_reduce(b, v), v); }

i64 mod_sub(i64 a, i64 b, i64 v) { return mod_reduce(mod_reduce(a, v) - mod_reduce(b, v), v); }

i64 mod_mul(i64 a, i64 b, i64 v) {
    using i128 = __int128;
    i128 p = static_cast<i128>(mod_reduce(a, v)) * mod_reduce(b, v);
    return static_cast<i64>(p % v);
}

i64 mod_pow(i64 base, i64 exp, i64 v) {
    if (exp < 0) return mod_pow(mod_inverse(base, v), -exp, v);
    i64 result = mod_reduce(1, v);
    i64 b = mod_reduce(base, v);
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, b, v);
        b = mod_mul(b, b, v);
        exp >>= 1;
    }
    return result;
}

i64 mod_inverse(i64 u, i64 v) {
    i64 a = mod_reduce(u, v);
    i64 old_r = a, r = v;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) throw std::domain_error("element not invertible: gcd != 1");
    return mod_reduce(old_s, v);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set sufficient for all n < 3.3 * 10^24, covers 64-bit.
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Residue::Residue(i64 x, i64 v) : value(mod_reduce(x, v)), modulus(v) {}

namespace {
void check_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("modulus mismatch");
}
}  // namespace

Residue Residue::operator+(const Residue& o) const {
    check_same_modulus(*this, o);
    return Residue(mod_add(value, o.value, modulus), modulus);
}

Residue Residue::operator-(const Residue& o) const {
    check_same_modulus(*this, o);
    return Residue(mod_sub(value, o.value, modulus), modulus);
}

Residue Residue::operator*(const Residue& o) const {
    check_same_modulus(*this, o);
    return Residue(mod_mul(value, o.value, modulus), modulus);
}

Residue Residue::operator-() const { return Residue(-value, modulus); }

Residue Residue::pow(i64 e) const { return Residue(mod_pow(value, e, modulus), modulus); }

Residue Residue::inverse() const { return Residue(mod_inverse(value, modulus), modulus); }

IntervalSet::IntervalSet(i64 x_, i64 y_, i64 d_) : x(x_), y(y_), d(d_) {
    if (d <= 0) throw std::invalid_argument("interval step must be positive");
    if (x <= y && mod_reduce(x, d) != mod_reduce(y, d))
        throw std::invalid_argument("interval endpoints not congruent mod step");
}

std::vector<i64> IntervalSet::values() const {
    std::vector<i64> out;
    if (empty()) return out;
    out.reserve(static_cast<size_t>(size()));
    for (i64 t = x; t <= y; t += d) out.push_back(t);
    return out;
}

std::vector<i64> interval(i64 x, i64 y, i64 d) { return IntervalSet(x, y, d).values(); }

PrimeField::PrimeField(i64 q_) : q(q_) {
    if (!is_prime(q)) throw std::invalid_argument("unsupported field");
}

namespace {
std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}
}  // namespace

i64 multiplicative_order(i64 a, i64 q) {
    a = mod_reduce(a, q);
    if (a == 0) throw std::invalid_argument("order of zero is undefined");
    i64 order = q - 1;
    for (i64 p : prime_factors(q - 1)) {
        while (order % p == 0 && mod_pow(a, order / p, q) == 1) order /= p;
    }
    return order;
}

Residue find_primitive_element(i64 q) {
    if (!is_prime(q)) throw std::invalid_argument("unsupported field");
    if (q < 3) throw std::invalid_argument("q must be at least 3");
    for (i64 g = 2; g < q; ++g) {
        if (multiplicative_order(g, q) == q - 1) return Residue(g, q);
    }
    throw std::logic_error("no primitive element found");  // unreachable for prime q
}

std::vector<i64> subgroup(i64 beta, i64 q) {
    beta = mod_reduce(beta, q);
    if (beta == 0) throw std::invalid_argument("subgroup generator must be nonzero");
    std::vector<i64> out;
    i64 x = 1;
    do {
        out.push_back(x);
        x = mod_mul(x, beta, q);
    } while (x != 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cedf
