#include "cedf/decomposition.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace cedf {

LabeledDigraph to_digraph(const Cedf& c) {
    LabeledDigraph g;
    std::set<i64> verts;
    int m = static_cast<int>(c.blocks.size());
    for (const auto& block : c.blocks) verts.insert(block.begin(), block.end());
    g.vertices.assign(verts.begin(), verts.end());
    for (int i = 0; i < m; ++i) {
        const auto& tails = c.blocks[static_cast<size_t>(i)];
        const auto& heads = c.blocks[static_cast<size_t>((i + 1) % m)];
        for (i64 a : tails)
            for (i64 b : heads) g.arcs.emplace_back(a, b);
    }
    return g;
}

DifferenceMultiset arc_differences(const LabeledDigraph& g, i64 v) {
    DifferenceMultiset out(v);
    for (const auto& [tail, head] : g.arcs) out.add(tail - head);
    return out;
}

Decomposition develop(const Cedf& c) {
    if (!verify(c).is_valid) throw std::invalid_argument("cannot develop an invalid CEDF");
    Decomposition dec;
    dec.base = c;
    dec.offsets.resize(static_cast<size_t>(c.params.v));
    for (i64 g = 0; g < c.params.v; ++g) dec.offsets[static_cast<size_t>(g)] = g;
    return dec;
}

DecompositionReport verify_decomposition(const Decomposition& dec) {
    const i64 v = dec.base.params.v;
    const i64 lambda = dec.base.params.lambda;
    DecompositionReport rep;
    rep.valid = true;

    LabeledDigraph base = to_digraph(dec.base);
    rep.arcs_total = static_cast<i64>(base.arcs.size()) * static_cast<i64>(dec.offsets.size());

    // Tail-chunked dense tally: rows are tails in [t0, t1), columns heads.
    const i64 chunk_rows = std::max<i64>(1, std::min(v, (i64{8} << 20) / std::max<i64>(v, 1)));
    std::vector<i64> tally;
    for (i64 t0 = 0; t0 < v; t0 += chunk_rows) {
        const i64 rows = std::min(chunk_rows, v - t0);
        tally.assign(static_cast<size_t>(rows * v), 0);
        for (i64 g : dec.offsets) {
            for (const auto& [a, b] : base.arcs) {
                i64 tail = mod_add(a, g, v);
                if (tail < t0 || tail >= t0 + rows) continue;
                i64 head = mod_add(b, g, v);
                ++tally[static_cast<size_t>((tail - t0) * v + head)];
            }
        }
        for (i64 tail = t0; tail < t0 + rows; ++tail) {
            for (i64 head = 0; head < v; ++head) {
                i64 expected = tail == head ? 0 : lambda;
                i64 observed = tally[static_cast<size_t>((tail - t0) * v + head)];
                if (observed != expected) {
                    rep.valid = false;
                    rep.deviations.push_back({tail, head, observed, expected});
                }
            }
        }
    }
    return rep;
}

void export_arcs(const Decomposition& dec, std::ostream& out) {
    const i64 v = dec.base.params.v;
    LabeledDigraph base = to_digraph(dec.base);
    for (size_t idx = 0; idx < dec.offsets.size(); ++idx) {
        i64 g = dec.offsets[idx];
        std::vector<std::pair<i64, i64>> arcs;
        arcs.reserve(base.arcs.size());
        for (const auto& [a, b] : base.arcs) arcs.emplace_back(mod_add(a, g, v), mod_add(b, g, v));
        std::sort(arcs.begin(), arcs.end());
        for (const auto& [tail, head] : arcs) out << tail << ' ' << head << ' ' << idx << '\n';
    }
}

}  // namespace cedf
