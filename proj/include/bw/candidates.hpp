#pragma once

#include <cstdint>

#include "bw/types.hpp"

namespace bw {

// One decode hypothesis: a lattice point and its squared distance to the
// list's target.
struct Candidate {
    IntVec point;
    double dist2 = 0.0;
};

struct CandidateList {
    std::vector<Candidate> items;
    RealVec target;

    bool empty() const { return items.empty(); }
    std::size_t size() const { return items.size(); }

    // Index of the closest candidate; distance ties broken toward the
    // lexicographically smaller point. Requires a non-empty list.
    std::size_t argmin() const;
};

// Scalar-operation tallies, threaded through every decode. Plain counters;
// cheap enough to stay always-on.
struct OpCounter {
    std::uint64_t calls = 0;       // decoder invocations (all levels)
    std::uint64_t base_calls = 0;  // t = 1 invocations
    std::uint64_t adds = 0;        // scalar additions/subtractions
    std::uint64_t muls = 0;        // scalar multiplications (incl. dist MACs)
    std::uint64_t rounds = 0;      // scalar rounding ops
    std::uint64_t compares = 0;    // point comparisons in sort/dedup

    std::uint64_t total() const { return adds + muls + rounds + compares; }

    OpCounter& operator+=(const OpCounter& o) {
        calls += o.calls;
        base_calls += o.base_calls;
        adds += o.adds;
        muls += o.muls;
        rounds += o.rounds;
        compares += o.compares;
        return *this;
    }
};

// Stable merge sort by lexicographic point order followed by exact-equality
// dedup keeping first occurrences. Comparison count lands in ops.compares
// (O(k log k) point comparisons, each O(n) coordinates worst case).
CandidateList merge_sort_dedup(CandidateList list, OpCounter* ops = nullptr);

// `buf` is an optional reusable scratch buffer for the merge passes.
void sort_dedup_in_place(std::vector<Candidate>& items, OpCounter* ops,
                         std::vector<Candidate>* buf = nullptr);

}  // namespace bw
