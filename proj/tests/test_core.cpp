#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cedf/cedf.hpp"
#include "cedf/json_io.hpp"

using namespace cedf;

namespace {

// The (21, 5, 2, 1) worked example over Z_21.
Cedf example21() {
    return make_cedf({21, 5, 2, 1}, {{16, 18}, {4, 5}, {3, 6}, {9, 17}, {0, 1}});
}

std::vector<i64> random_subset(std::mt19937_64& rng, i64 v, int size) {
    std::set<i64> s;
    while (static_cast<int>(s.size()) < size) s.insert(static_cast<i64>(rng() % v));
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("delta computes the exact difference multiset") {
    std::vector<i64> a{16, 18}, b{4, 5};
    auto d = delta(a, b, 21);
    CHECK(d.total() == 4);
    for (i64 r : {11, 12, 13, 14}) CHECK(d.count(r) == 1);

    std::vector<i64> z{0};
    auto d2 = delta(z, z, 5);
    CHECK(d2.count(0) == 1);
    CHECK(d2.total() == 1);

    std::vector<i64> p{0, 1}, q{2, 4};
    auto d3 = delta(p, q, 9);
    for (i64 r : {5, 6, 7, 8}) CHECK(d3.count(r) == 1);

    CHECK_THROWS_AS(delta(std::vector<i64>{}, a, 21), std::invalid_argument);
}

TEST_CASE("delta cardinality |A|*|B|") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        i64 v = 5 + static_cast<i64>(rng() % 60);
        int na = 1 + static_cast<int>(rng() % 5);
        int nb = 1 + static_cast<int>(rng() % 5);
        if (na + nb > v) continue;
        auto a = random_subset(rng, v, na);
        auto b = random_subset(rng, v, nb);
        CHECK(delta(a, b, v).total() == static_cast<i64>(na) * nb);
    }
}

TEST_CASE("delta translation identity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        i64 v = 5 + static_cast<i64>(rng() % 60);
        auto s1 = random_subset(rng, v, 1 + static_cast<int>(rng() % 4));
        auto s2 = random_subset(rng, v, 1 + static_cast<int>(rng() % 4));
        i64 x1 = static_cast<i64>(rng() % v), x2 = static_cast<i64>(rng() % v);
        auto t1 = s1, t2 = s2;
        for (auto& e : t1) e = mod_add(e, x1, v);
        for (auto& e : t2) e = mod_add(e, x2, v);
        auto lhs = delta(t1, t2, v);
        DifferenceMultiset rhs(v);
        for (const auto& [r, c] : delta(s1, s2, v).entries()) rhs.add(r + x1 - x2, c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("external_differences of the Z_21 example covers Z_21 minus zero") {
    auto d = external_differences(example21());
    CHECK(d.total() == 20);
    CHECK(d.count(0) == 0);
    for (i64 r = 1; r < 21; ++r) CHECK(d.count(r) == 1);
}

TEST_CASE("external_differences flags zero for overlapping blocks") {
    auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {1, 2}});
    CHECK(external_differences(c).count(0) > 0);
}

TEST_CASE("external_differences for a valid (9,2,2,1) pair") {
    auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {2, 4}});
    auto d = external_differences(c);
    for (i64 r = 1; r < 9; ++r) CHECK(d.count(r) == 1);
}

TEST_CASE("verify accepts the paper examples") {
    CHECK(verify(example21()).is_valid);
    auto c49 = make_cedf({49, 3, 4, 1}, {{0, 1, 2, 3}, {8, 21, 26, 39}, {7, 18, 37, 48}});
    CHECK(verify(c49).is_valid);
}

TEST_CASE("verify reports instead of throwing") {
    auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {1, 2}});
    auto rep = verify(c);
    CHECK_FALSE(rep.disjoint);
    CHECK_FALSE(rep.is_valid);

    auto bad_sizes = make_cedf({9, 2, 2, 1}, {{0, 1}, {2}});
    CHECK_FALSE(verify(bad_sizes).sizes_ok);

    // raw params violating the necessary condition always fail multiset_ok
    auto raw = make_cedf({10, 2, 2, 1}, {{0, 1}, {2, 4}});
    CHECK_FALSE(verify(raw).multiset_ok);
    CHECK_FALSE(raw.params.satisfies_necessary_condition());
}

TEST_CASE("verify deviation lists every mismatch") {
    auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {2, 5}});
    auto rep = verify(c);
    if (!rep.multiset_ok) {
        CHECK_FALSE(rep.deviation.empty());
        auto diffs = external_differences(c);
        for (const auto& d : rep.deviation) {
            CHECK(d.observed == diffs.count(d.residue));
            CHECK(d.observed != d.expected);
        }
    }
}

TEST_CASE("symmetry transforms") {
    auto ex = example21();
    SUBCASE("rotation") {
        auto r = rotate(ex, 4);
        CHECK(r.blocks ==
              std::vector<std::vector<i64>>{{0, 1}, {16, 18}, {4, 5}, {3, 6}, {9, 17}});
    }
    SUBCASE("translation") {
        auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {2, 4}});
        CHECK(translate(c, 3).blocks == std::vector<std::vector<i64>>{{3, 4}, {5, 7}});
    }
    SUBCASE("scaling") {
        auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {2, 4}});
        CHECK(scale(c, 2).blocks == std::vector<std::vector<i64>>{{0, 2}, {4, 8}});
        CHECK_THROWS_AS(scale(c, 3), std::invalid_argument);
    }
    SUBCASE("reversal") {
        auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {2, 4}});
        CHECK(reverse(c).blocks == std::vector<std::vector<i64>>{{2, 4}, {0, 1}});
    }
}

TEST_CASE("verify is invariant under every symmetry") {
    std::mt19937_64 rng(17);
    auto ex = example21();
    REQUIRE(verify(ex).is_valid);
    for (int trial = 0; trial < 100; ++trial) {
        Cedf c = ex;
        int kind = static_cast<int>(rng() % 4);
        switch (kind) {
            case 0: c = translate(c, static_cast<i64>(rng() % 21)); break;
            case 1: {
                i64 u;
                do u = 1 + static_cast<i64>(rng() % 20);
                while (std::gcd(u, i64{21}) != 1);
                c = scale(c, u);
                break;
            }
            case 2: c = rotate(c, static_cast<int>(rng() % 5)); break;
            default: c = reverse(c); break;
        }
        CHECK(verify(c).is_valid);
    }
}

TEST_CASE("canonical_form is constant on an orbit and idempotent") {
    auto ex = example21();
    auto canon = canonical_form(ex);
    CHECK(canonical_form(rotate(ex, 4)) == canon);
    CHECK(canonical_form(canon) == canon);
    CHECK(canonical_form(translate(scale(reverse(ex), 2), 7)) == canon);
}

TEST_CASE("orbit of a small CEDF shares one canonical representative") {
    auto c = make_cedf({9, 2, 2, 1}, {{0, 1}, {2, 4}});
    auto canon = canonical_form(c);
    int images = 0;
    for (int rev = 0; rev < 2; ++rev)
        for (int r = 0; r < 2; ++r)
            for (i64 u = 1; u < 9; ++u) {
                if (std::gcd(u, i64{9}) != 1) continue;
                for (i64 g = 0; g < 9; ++g) {
                    Cedf img = translate(scale(rotate(rev ? reverse(c) : c, r), u), g);
                    CHECK(canonical_form(img) == canon);
                    ++images;
                }
            }
    CHECK(images == 9 * 6 * 2 * 2);
}

TEST_CASE("offset verification matches Remark reindexing") {
    // c is a c_off-CEDF iff (A_0, A_{c_off}, A_{2 c_off}, ...) is a CEDF,
    // when gcd(c_off, m) = 1.
    std::mt19937_64 rng(23);
    auto ex = example21();
    int m = 5;
    for (int c_off = 1; c_off < m; ++c_off) {
        if (std::gcd(c_off, m) != 1) continue;
        std::vector<std::vector<i64>> reindexed;
        for (int i = 0; i < m; ++i)
            reindexed.push_back(ex.blocks[static_cast<size_t>((i * c_off) % m)]);
        Cedf re = make_cedf(ex.params, reindexed);
        CHECK(verify(ex, c_off).is_valid == verify(re, 1).is_valid);
    }
    // and on random garbage candidates the equivalence still holds
    for (int trial = 0; trial < 30; ++trial) {
        i64 v = 21;
        std::set<i64> pool;
        while (pool.size() < 10) pool.insert(static_cast<i64>(rng() % v));
        std::vector<i64> elems{pool.begin(), pool.end()};
        std::shuffle(elems.begin(), elems.end(), rng);
        std::vector<std::vector<i64>> blocks(5);
        for (int i = 0; i < 10; ++i) blocks[static_cast<size_t>(i / 2)].push_back(elems[static_cast<size_t>(i)]);
        Cedf cand = make_cedf({21, 5, 2, 1}, blocks);
        for (int c_off : {2, 3, 4}) {
            std::vector<std::vector<i64>> reindexed;
            for (int i = 0; i < 5; ++i)
                reindexed.push_back(cand.blocks[static_cast<size_t>((i * c_off) % 5)]);
            Cedf re = make_cedf(cand.params, reindexed);
            CHECK(verify(cand, c_off).is_valid == verify(re, 1).is_valid);
        }
    }
}

TEST_CASE("difference multiset total is m*l^2") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        i64 v = 20 + static_cast<i64>(rng() % 40);
        int m = 2 + static_cast<int>(rng() % 3);
        int l = 1 + static_cast<int>(rng() % 3);
        if (static_cast<i64>(m) * l > v) continue;
        auto elems = random_subset(rng, v, m * l);
        std::vector<std::vector<i64>> blocks(static_cast<size_t>(m));
        for (int i = 0; i < m * l; ++i) blocks[static_cast<size_t>(i / l)].push_back(elems[static_cast<size_t>(i)]);
        Cedf c = make_cedf({v, m, l, 1}, blocks);
        CHECK(external_differences(c).total() == static_cast<i64>(m) * l * l);
    }
}

TEST_CASE("JSON round trip") {
    auto ex = example21();
    auto text = cedf_to_json(ex);
    CHECK(cedf_from_json(text) == ex);

    CHECK_THROWS_AS(cedf_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(cedf_from_json("{\"v\": 21}"), std::invalid_argument);
    CHECK_THROWS_AS(
        cedf_from_json("{\"v\":9,\"m\":2,\"l\":2,\"lambda\":1,\"blocks\":[[0,1],[2,9]]}"),
        std::invalid_argument);
}

TEST_CASE("dense and sparse multisets agree") {
    const i64 big = (i64{1} << 20) + 7;  // sparse path
    DifferenceMultiset sparse(big);
    DifferenceMultiset dense(100);
    for (i64 x : {3, 5, 3, 99}) {
        sparse.add(x);
        dense.add(x);
    }
    CHECK(sparse.count(3) == 2);
    CHECK(dense.count(3) == 2);
    CHECK(sparse.total() == dense.total());
    CHECK(sparse.entries() == dense.entries());
}
