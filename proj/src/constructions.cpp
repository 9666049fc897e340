#include "cedf/constructions.hpp"

#include <algorithm>

namespace cedf {

namespace {

Cedf checked(Cedf c, const char* what) {
    if (!verify(c).is_valid) throw std::logic_error(std::string("construction bug: ") + what);
    return c;
}

}  // namespace

L2Schedule l2_schedule(int m) {
    if (m <= 1 || m % 2 == 0) throw std::invalid_argument("m must be odd and > 1");
    const int u = (m % 4 == 1) ? (m - 1) / 4 : (m - 3) / 4;
    L2Schedule s;
    s.m = m;
    s.x.resize(static_cast<size_t>(m));
    s.t.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        i64 x;
        if (i == m - 2)
            x = 2 * m - 7;
        else if (i == m - 1)
            x = 2 * m - 1;
        else if (i % 2 == 0)
            x = 2 * i;  // i in [0, m-3]_2
        else if (i <= 2 * u - 1)
            x = 4 * m - 2 * (i + 1);  // i in [1, 2u-1]_2
        else
            x = 4 * (m - 1) - 2 * (i + 1);  // i in [2u+1, m-4]_2
        s.x[static_cast<size_t>(i)] = x;
        s.t[static_cast<size_t>(i)] = (i == m - 1) ? 2 * m - 2 : (i == m - 2) ? 3 : (i % 2 == 0 ? 1 : 2);
    }
    return s;
}

Cedf construct_l2(int m) {
    L2Schedule s = l2_schedule(m);
    const i64 v = 4 * static_cast<i64>(m) + 1;
    std::vector<std::vector<i64>> blocks;
    blocks.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        i64 x = s.x[static_cast<size_t>(i)];
        blocks.push_back({x, x + s.t[static_cast<size_t>(i)]});
    }
    return checked(make_cedf({v, m, 2, 1}, std::move(blocks)), "l=2 construction failed verify");
}

M3Parameters::M3Parameters(int k_) : k(k_) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    l = 2 * k;
    d = 6 * static_cast<i64>(k) * k - 3 * k;
    v = 12 * static_cast<i64>(k) * k + 1;
}

Cedf construct_m3(int l) {
    if (l < 2 || l % 2 != 0) throw std::invalid_argument("l must be even and >= 2");
    if (l == 2) return construct_l2(3);
    M3Parameters p(l / 2);
    const i64 k = p.k;
    std::vector<i64> a0, a1, a2;
    for (i64 w = 0; w < 2 * k; ++w) {
        a0.push_back(w);
        a1.push_back(p.d * w + 6 * k * k - k - 1);
        a2.push_back((p.d + 1) * w - 1);
    }
    return checked(make_cedf({p.v, 3, l, 1}, {std::move(a0), std::move(a1), std::move(a2)}),
                   "m=3 construction failed verify");
}

bool check_coset_condition(i64 q, i64 alpha, int m, int l) {
    if (!is_prime(q)) throw std::invalid_argument("unsupported field");
    if (q != static_cast<i64>(m) * l * l + 1) throw std::invalid_argument("q must equal m*l^2 + 1");
    if (multiplicative_order(alpha, q) != q - 1) throw std::invalid_argument("alpha is not primitive");

    const i64 beta = mod_pow(alpha, l, q);
    const i64 subgroup_order = static_cast<i64>(l) * m;
    if (multiplicative_order(beta, q) != subgroup_order) return false;

    // Coset of x is identified by the discrete log of x mod the index l:
    // x = alpha^e implies x*H = alpha^(e mod l)*H, since H = <alpha^l>.
    std::vector<i64> log_table(static_cast<size_t>(q), -1);
    i64 pow_val = 1;
    for (i64 e = 0; e < q - 1; ++e) {
        log_table[static_cast<size_t>(pow_val)] = e;
        pow_val = mod_mul(pow_val, alpha, q);
    }

    std::vector<bool> coset_hit(static_cast<size_t>(l), false);
    for (int j = 0; j < l; ++j) {
        i64 rep = mod_sub(mod_pow(beta, static_cast<i64>(j) * m + 1, q), 1, q);
        if (rep == 0) return false;
        i64 coset = log_table[static_cast<size_t>(rep)] % l;
        if (coset_hit[static_cast<size_t>(coset)]) return false;
        coset_hit[static_cast<size_t>(coset)] = true;
    }
    return true;
}

std::optional<Cedf> construct_prime_field(i64 q, int m, int l) {
    if (!is_prime(q)) throw std::invalid_argument("unsupported field");
    if (q != static_cast<i64>(m) * l * l + 1) throw std::invalid_argument("q must equal m*l^2 + 1");
    if (m < 2) throw std::invalid_argument("m must be >= 2");

    for (i64 alpha = 2; alpha < q; ++alpha) {
        if (multiplicative_order(alpha, q) != q - 1) continue;
        if (!check_coset_condition(q, alpha, m, l)) continue;
        const i64 beta = mod_pow(alpha, l, q);
        std::vector<std::vector<i64>> blocks(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < l; ++j)
                blocks[static_cast<size_t>(i)].push_back(
                    mod_pow(beta, static_cast<i64>(j) * m + i, q));
        Cedf candidate = make_cedf({q, m, l, 1}, std::move(blocks));
        if (verify(candidate).is_valid) return candidate;
    }
    return std::nullopt;  // condition not met
}

AlphaDecomposition decompose_alpha(i64 alpha, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const i64 step = 2 * static_cast<i64>(k) - 1;
    if (step == 1) return {alpha, 0, 0};  // k = 1: the remainder part is always 0
    // Remainder 2b + eps ranges over [0, 2k-2] since (k-1, 1) is excluded.
    i64 r = mod_reduce(alpha, step);
    i64 a = (alpha - r) / step;
    return {a, r / 2, static_cast<int>(r % 2)};
}

i64 psi(i64 alpha, int k) {
    AlphaDecomposition dec = decompose_alpha(alpha, k);
    const i64 d = 6 * static_cast<i64>(k) * k - 3 * k;
    return -(2 * static_cast<i64>(k) + 1) * dec.a + (6 * static_cast<i64>(k) + 1) * (dec.b + dec.eps) +
           d * dec.eps;
}

CongruenceBox CongruenceBox::standard(int k) {
    return {2 - 4 * static_cast<i64>(k), 4 * static_cast<i64>(k) - 2, -6 * static_cast<i64>(k),
            6 * static_cast<i64>(k)};
}

CongruenceBox CongruenceBox::shifted(int k) {
    const i64 d = 6 * static_cast<i64>(k) * k - 3 * k;
    return {1 - 4 * static_cast<i64>(k), 4 * static_cast<i64>(k) - 2, d - 6 * k, d + 6 * k};
}

CongruenceSolutionSet solve_congruence_box(int k, const CongruenceBox& box) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    const i64 d = 6 * static_cast<i64>(k) * k - 3 * k;
    const i64 v = 12 * static_cast<i64>(k) * k + 1;
    CongruenceSolutionSet out;
    for (i64 x = box.x_lo; x <= box.x_hi; ++x)
        for (i64 y = box.y_lo; y <= box.y_hi; ++y)
            if (mod_reduce(d * x + y, v) == 0) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

CongruenceSolutionSet expected_standard_solutions(int k) {
    const i64 kk = k;
    CongruenceSolutionSet out = {{0, 0},
                                 {2 - 4 * kk, 4 * kk + 2},
                                 {1 - 2 * kk, 2 * kk + 1},
                                 {2 * kk + 1, 4 * kk},
                                 {4 * kk, 2 * kk - 1}};
    CongruenceSolutionSet full = out;
    for (const auto& [x, y] : out)
        if (x != 0 || y != 0) full.emplace_back(-x, -y);
    std::sort(full.begin(), full.end());
    return full;
}

CongruenceSolutionSet expected_shifted_solutions(int k) {
    const i64 d = 6 * static_cast<i64>(k) * k - 3 * k;
    CongruenceSolutionSet out = expected_standard_solutions(k);
    for (auto& [x, y] : out) {
        x -= 1;
        y += d;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExistenceAnswer existence_query(i64 v, int m, int l, int lambda) {
    if (static_cast<i64>(m) * l * l != static_cast<i64>(lambda) * (v - 1))
        return {Existence::not_exists, "necessary condition m*l^2 = lambda*(v-1) fails"};
    if (lambda == 1 && l == 2) {
        if (v == 4 * static_cast<i64>(m) + 1)
            return {Existence::exists, "settled: l=2 cyclic CEDFs exist iff v = 4m+1"};
        return {Existence::not_exists, "settled: l=2 cyclic CEDFs exist iff v = 4m+1"};
    }
    if (lambda == 1 && m == 3) {
        if (l % 2 == 0) return {Existence::exists, "settled: m=3 cyclic CEDFs exist iff v = 3l^2+1, l even"};
        return {Existence::not_exists, "settled: m=3 cyclic CEDFs require l even"};
    }
    if (lambda == 1 && m % 2 == 1 && l % 2 == 1)
        return {Existence::not_exists, "no cyclic CEDF with m and l both odd"};
    return {Existence::unknown, "no covering result"};
}

}  // namespace cedf
