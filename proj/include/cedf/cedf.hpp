#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cedf/modmath.hpp"

namespace cedf {

/// Parameters (v, m, l, lambda) of a candidate CEDF. The necessary
/// condition m*l^2 = lambda*(v-1) is queryable but not enforced, so
/// search experiments can probe infeasible parameter sets.
struct CedfParams {
    i64 v = 0;
    int m = 0;
    int l = 0;
    int lambda = 1;

    bool satisfies_necessary_condition() const {
        return static_cast<i64>(m) * l * l == static_cast<i64>(lambda) * (v - 1);
    }
    bool operator==(const CedfParams&) const = default;
};

/// An ordered sequence of blocks over Z_v. Block order is significant;
/// elements within a block are kept sorted ascending. Structural
/// validity is established by verify(), not by construction.
struct Cedf {
    CedfParams params;
    std::vector<std::vector<i64>> blocks;

    bool operator==(const Cedf&) const = default;
};

// Builds a Cedf, reducing every element mod v and sorting each block.
Cedf make_cedf(CedfParams params, std::vector<std::vector<i64>> blocks);

/// Exact multiset of residues mod v. Dense count array up to 2^20,
/// hash map above.
class DifferenceMultiset {
public:
    explicit DifferenceMultiset(i64 v);

    i64 modulus() const { return v_; }
    void add(i64 residue, i64 count = 1);
    void merge(const DifferenceMultiset& other);
    i64 count(i64 residue) const;
    i64 total() const { return total_; }

    // Sorted list of (residue, count) pairs with count > 0.
    std::vector<std::pair<i64, i64>> entries() const;

    bool operator==(const DifferenceMultiset& other) const;

private:
    static constexpr i64 kDenseLimit = i64{1} << 20;

    i64 v_;
    i64 total_ = 0;
    std::vector<i64> dense_;
    std::unordered_map<i64, i64> sparse_;
};

struct Deviation {
    i64 residue;
    i64 observed;
    i64 expected;
    bool operator==(const Deviation&) const = default;
};

struct VerifyReport {
    bool is_valid = false;
    bool disjoint = false;
    bool sizes_ok = false;
    bool multiset_ok = false;
    std::vector<Deviation> deviation;
};

// The difference list D(a, b) = {x - y : x in a, y in b} mod v.
DifferenceMultiset delta(std::span<const i64> a, std::span<const i64> b, i64 v);

// Union over i of D(A_i, A_{i+offset mod m}); total multiplicity m*l^2.
DifferenceMultiset external_differences(const Cedf& c, int offset = 1);

// The Definition oracle: disjointness, block sizes, and exact equality
// of the external difference multiset with lambda*(Z_v \ {0}).
// Never throws; failures are reported.
VerifyReport verify(const Cedf& c, int offset = 1);

// Symmetries acting on a CEDF. Scaling requires gcd(u, v) = 1.
Cedf translate(const Cedf& c, i64 g);
Cedf scale(const Cedf& c, i64 u);
Cedf rotate(const Cedf& c, int r);
Cedf reverse(const Cedf& c);

// Lexicographically least image (flattened block sequence) over the
// group generated by translations, unit scalings, rotations and
// reversal. Idempotent.
Cedf canonical_form(const Cedf& c);

// Flattened block sequence, the comparison key used by canonical_form.
std::vector<i64> flatten(const Cedf& c);

}  // namespace cedf
