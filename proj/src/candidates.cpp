#include "bw/candidates.hpp"

#include <utility>

namespace bw {

namespace {

bool point_less(const Candidate& a, const Candidate& b, OpCounter* ops) {
    if (ops) ++ops->compares;
    return lex_less(a.point, b.point);
}

// Classic top-down merge sort; ties take from the left half, which keeps the
// sort stable so dedup retains first occurrences.
void merge_sort(std::vector<Candidate>& v, std::vector<Candidate>& tmp,
                std::size_t lo, std::size_t hi, OpCounter* ops) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort(v, tmp, lo, mid, ops);
    merge_sort(v, tmp, mid, hi, ops);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (point_less(v[j], v[i], ops))
            tmp[k++] = std::move(v[j++]);
        else
            tmp[k++] = std::move(v[i++]);
    }
    while (i < mid) tmp[k++] = std::move(v[i++]);
    while (j < hi) tmp[k++] = std::move(v[j++]);
    for (std::size_t p = lo; p < hi; ++p) v[p] = std::move(tmp[p]);
}

}  // namespace

std::size_t CandidateList::argmin() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].dist2 < items[best].dist2 ||
            (items[i].dist2 == items[best].dist2 &&
             lex_less(items[i].point, items[best].point)))
            best = i;
    }
    return best;
}

void sort_dedup_in_place(std::vector<Candidate>& items, OpCounter* ops,
                         std::vector<Candidate>* buf) {
    if (items.size() < 2) return;
    std::vector<Candidate> local;
    std::vector<Candidate>& tmp = buf ? *buf : local;
    if (tmp.size() < items.size()) tmp.resize(items.size());
    merge_sort(items, tmp, 0, items.size(), ops);
    std::size_t w = 1;
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (ops) ++ops->compares;
        if (items[i].point != items[w - 1].point) {
            if (w != i) items[w] = std::move(items[i]);
            ++w;
        }
    }
    items.resize(w);
}

CandidateList merge_sort_dedup(CandidateList list, OpCounter* ops) {
    sort_dedup_in_place(list.items, ops);
    return list;
}

}  // namespace bw
