#include "cedf/cedf.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cedf {

Cedf make_cedf(CedfParams params, std::vector<std::vector<i64>> blocks) {
    if (params.v <= 0) throw std::invalid_argument("group order must be positive");
    for (auto& block : blocks) {
        for (auto& e : block) e = mod_reduce(e, params.v);
        std::sort(block.begin(), block.end());
    }
    return Cedf{params, std::move(blocks)};
}

DifferenceMultiset::DifferenceMultiset(i64 v) : v_(v) {
    if (v <= 0) throw std::invalid_argument("modulus must be positive");
    if (v <= kDenseLimit) dense_.assign(static_cast<size_t>(v), 0);
}

void DifferenceMultiset::add(i64 residue, i64 count) {
    i64 r = mod_reduce(residue, v_);
    if (!dense_.empty())
        dense_[static_cast<size_t>(r)] += count;
    else
        sparse_[r] += count;
    total_ += count;
}

void DifferenceMultiset::merge(const DifferenceMultiset& other) {
    if (other.v_ != v_) throw std::invalid_argument("modulus mismatch");
    for (const auto& [r, c] : other.entries()) add(r, c);
}

i64 DifferenceMultiset::count(i64 residue) const {
    i64 r = mod_reduce(residue, v_);
    if (!dense_.empty()) return dense_[static_cast<size_t>(r)];
    auto it = sparse_.find(r);
    return it == sparse_.end() ? 0 : it->second;
}

std::vector<std::pair<i64, i64>> DifferenceMultiset::entries() const {
    std::vector<std::pair<i64, i64>> out;
    if (!dense_.empty()) {
        for (i64 r = 0; r < v_; ++r)
            if (dense_[static_cast<size_t>(r)] != 0) out.emplace_back(r, dense_[static_cast<size_t>(r)]);
    } else {
        out.assign(sparse_.begin(), sparse_.end());
        std::sort(out.begin(), out.end());
    }
    return out;
}

bool DifferenceMultiset::operator==(const DifferenceMultiset& other) const {
    return v_ == other.v_ && total_ == other.total_ && entries() == other.entries();
}

DifferenceMultiset delta(std::span<const i64> a, std::span<const i64> b, i64 v) {
    if (a.empty() || b.empty()) throw std::invalid_argument("delta of an empty set");
    DifferenceMultiset out(v);
    for (i64 x : a)
        for (i64 y : b) out.add(x - y);
    return out;
}

DifferenceMultiset external_differences(const Cedf& c, int offset) {
    int m = static_cast<int>(c.blocks.size());
    if (m < 2) throw std::invalid_argument("need at least two blocks");
    if (offset < 1 || offset >= m) throw std::invalid_argument("offset out of range");
    DifferenceMultiset out(c.params.v);
    for (int i = 0; i < m; ++i) {
        const auto& a = c.blocks[static_cast<size_t>(i)];
        const auto& b = c.blocks[static_cast<size_t>((i + offset) % m)];
        for (i64 x : a)
            for (i64 y : b) out.add(x - y);
    }
    return out;
}

VerifyReport verify(const Cedf& c, int offset) {
    VerifyReport rep;
    int m = static_cast<int>(c.blocks.size());
    rep.sizes_ok = m == c.params.m && m >= 2;
    for (const auto& block : c.blocks)
        if (static_cast<int>(block.size()) != c.params.l) rep.sizes_ok = false;

    std::set<i64> seen;
    rep.disjoint = true;
    for (const auto& block : c.blocks)
        for (i64 e : block) {
            if (!seen.insert(mod_reduce(e, c.params.v)).second) rep.disjoint = false;
        }

    rep.multiset_ok = false;
    if (m >= 2 && offset >= 1 && offset < m) {
        DifferenceMultiset diffs = external_differences(c, offset);
        rep.multiset_ok = true;
        for (i64 r = 0; r < c.params.v; ++r) {
            i64 expected = r == 0 ? 0 : c.params.lambda;
            i64 observed = diffs.count(r);
            if (observed != expected) {
                rep.multiset_ok = false;
                rep.deviation.push_back({r, observed, expected});
            }
        }
    }
    rep.is_valid = rep.disjoint && rep.sizes_ok && rep.multiset_ok;
    return rep;
}

Cedf translate(const Cedf& c, i64 g) {
    auto blocks = c.blocks;
    for (auto& block : blocks) {
        for (auto& e : block) e = mod_add(e, g, c.params.v);
        std::sort(block.begin(), block.end());
    }
    return Cedf{c.params, std::move(blocks)};
}

Cedf scale(const Cedf& c, i64 u) {
    if (std::gcd(mod_reduce(u, c.params.v), c.params.v) != 1)
        throw std::invalid_argument("scale factor must be a unit mod v");
    auto blocks = c.blocks;
    for (auto& block : blocks) {
        for (auto& e : block) e = mod_mul(e, u, c.params.v);
        std::sort(block.begin(), block.end());
    }
    return Cedf{c.params, std::move(blocks)};
}

Cedf rotate(const Cedf& c, int r) {
    int m = static_cast<int>(c.blocks.size());
    if (r < 0 || r >= m) throw std::invalid_argument("rotation out of range");
    std::vector<std::vector<i64>> blocks;
    blocks.reserve(c.blocks.size());
    for (int i = 0; i < m; ++i) blocks.push_back(c.blocks[static_cast<size_t>((r + i) % m)]);
    return Cedf{c.params, std::move(blocks)};
}

Cedf reverse(const Cedf& c) {
    auto blocks = c.blocks;
    std::reverse(blocks.begin(), blocks.end());
    return Cedf{c.params, std::move(blocks)};
}

std::vector<i64> flatten(const Cedf& c) {
    std::vector<i64> out;
    for (const auto& block : c.blocks) out.insert(out.end(), block.begin(), block.end());
    return out;
}

Cedf canonical_form(const Cedf& c) {
    const i64 v = c.params.v;
    int m = static_cast<int>(c.blocks.size());
    Cedf best = c;
    std::vector<i64> best_key = flatten(best);
    // Every symmetry factors as an affine value map applied after an
    // index operation (rotation, optionally composed with reversal).
    for (int rev = 0; rev < 2; ++rev) {
        for (int r = 0; r < m; ++r) {
            Cedf indexed = rotate(rev ? reverse(c) : c, r);
            for (i64 u = 1; u < v; ++u) {
                if (std::gcd(u, v) != 1) continue;
                Cedf scaled = scale(indexed, u);
                for (i64 g = 0; g < v; ++g) {
                    Cedf candidate = translate(scaled, g);
                    std::vector<i64> key = flatten(candidate);
                    if (key < best_key) {
                        best_key = std::move(key);
                        best = std::move(candidate);
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace cedf
