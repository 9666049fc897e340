#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cedf/cedf.hpp"
#include "cedf/modmath.hpp"

namespace cedf {

/// Offsets x_i and gaps t_i defining the blocks A_i = x_i + {0, t_i}
/// of the (4m+1, m, 2, 1) construction for odd m.
struct L2Schedule {
    int m;
    std::vector<i64> x;
    std::vector<i64> t;
};

L2Schedule l2_schedule(int m);

// (4m+1, m, 2, 1)-CEDF in Z_{4m+1} for odd m > 1. The output is
// verified before being returned; a verification failure throws
// std::logic_error (construction bug).
Cedf construct_l2(int m);

/// Derived parameters of the m = 3 construction: l = 2k, d = 6k^2-3k,
/// v = 12k^2+1.
struct M3Parameters {
    int k;
    int l;
    i64 d;
    i64 v;

    explicit M3Parameters(int k);
};

// (3l^2+1, 3, l, 1)-CEDF in Z_{3l^2+1} for even l >= 2. l = 2 delegates
// to construct_l2(3). Output verified before return.
Cedf construct_m3(int l);

// With beta = alpha^l and H = <beta> of order l*m, true iff
// {beta-1, beta^{m+1}-1, ..., beta^{(l-1)m+1}-1} represents every coset
// of H in F_q* exactly once. alpha must be primitive and q = m*l^2 + 1.
bool check_coset_condition(i64 q, i64 alpha, int m, int l);

// Searches primitive elements ascending; for an alpha passing the coset
// condition builds A_i = {beta^{jm+i}} and verifies. Empty optional
// means no primitive element yielded a verified CEDF ("condition not
// met"). q must be prime (else "unsupported field") with q = m*l^2 + 1.
std::optional<Cedf> construct_prime_field(i64 q, int m, int l);

/// The unique writing alpha = (2k-1)a + 2b + eps with b in [0, k-1],
/// eps in {0, 1} and (b, eps) != (k-1, 1).
struct AlphaDecomposition {
    i64 a;
    i64 b;
    int eps;
    bool operator==(const AlphaDecomposition&) const = default;
};

AlphaDecomposition decompose_alpha(i64 alpha, int k);

// psi(alpha) = -(2k+1)a + (6k+1)(b+eps) + d*eps, congruent to
// -d*alpha mod 12k^2+1.
i64 psi(i64 alpha, int k);

/// Rectangle [x_lo, x_hi] x [y_lo, y_hi] in Z^2 used by the congruence
/// box oracle.
struct CongruenceBox {
    i64 x_lo, x_hi;
    i64 y_lo, y_hi;

    // [2-4k, 4k-2] x [-6k, 6k]
    static CongruenceBox standard(int k);
    // [1-4k, 4k-2] x [d-6k, d+6k]
    static CongruenceBox shifted(int k);
};

using CongruenceSolutionSet = std::vector<std::pair<i64, i64>>;

// Brute-force enumeration of all (alpha, beta) in the box with
// d*alpha + beta = 0 (mod 12k^2+1), sorted ascending. Requires k >= 2.
CongruenceSolutionSet solve_congruence_box(int k, const CongruenceBox& box);

// Closed-form solution sets the brute force must reproduce.
CongruenceSolutionSet expected_standard_solutions(int k);
CongruenceSolutionSet expected_shifted_solutions(int k);

enum class Existence { exists, not_exists, unknown };

struct ExistenceAnswer {
    Existence status;
    std::string reason;
};

// Applies, in order: the necessary condition m*l^2 = lambda*(v-1), the
// settled l = 2 and m = 3 cases, and nonexistence for m, l both odd.
// Everything else is unknown.
ExistenceAnswer existence_query(i64 v, int m, int l, int lambda);

}  // namespace cedf
