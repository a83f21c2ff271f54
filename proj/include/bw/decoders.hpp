#pragma once

#include <cstdint>

#include "bw/candidates.hpp"
#include "bw/types.hpp"

namespace bw {

// Truncation schedule for the aleph-bounded list decoder: the top relative
// squared radius delta plus one truncation size per radius in the chain
// delta * (2/3)^k, for as long as the radius stays above 1/4 (below that the
// BDD branch runs and no truncation applies).
struct ListSchedule {
    double delta = 0.375;
    std::vector<int> truncations;
};

// Number of radii in the chain that require a truncation size.
int radius_chain_length(double delta);

// Validating constructor helper; throws std::invalid_argument.
ListSchedule make_schedule(double delta, std::vector<int> truncations);
void validate_schedule(const ListSchedule& s);

// Recursive bounded-distance decoder. Returns a lattice point; whenever the
// target lies strictly inside the packing radius the result is the unique
// closest point. Distance ties between the two internal candidates go to the
// lexicographically smaller point.
IntVec rec_bdd(const RealVec& y, int t);
IntVec rec_bdd(const RealVec& y, int t, OpCounter& ops);

// All points of Z^2 within Euclidean distance r of y (inclusive boundary
// tolerance), lexicographically sorted.
CandidateList enum_z2(const RealVec& y, double r);
CandidateList enum_z2(const RealVec& y, double r, OpCounter& ops);

// Exact recursive list decoder: every lattice point within relative squared
// radius delta of y, sorted lexicographically, no duplicates. Accepts
// 1/4 <= delta < 3/4; completeness is guaranteed below 9/16.
CandidateList list_rec(const RealVec& y, int t, double delta);
CandidateList list_rec(const RealVec& y, int t, double delta, OpCounter& ops);

// One side of the recursion: pairs every u from the delta1-decode of y1 with
// every v from the delta2-decode of the unrotated residual y2 - u, emitting
// (u, u+v), or (u+v, u) with the halves swapped when reverse is set.
CandidateList subroutine(const RealVec& y1, const RealVec& y2, int t,
                         double delta1, double delta2, bool reverse);
CandidateList subroutine(const RealVec& y1, const RealVec& y2, int t,
                         double delta1, double delta2, bool reverse, OpCounter& ops);

// Aleph-bounded variant: at every merging level the candidates are first
// sorted and deduplicated, then only the schedule's truncation-many closest
// to that level's local target are kept (no radius removal).
CandidateList list_rec_bounded(const RealVec& y, int t, const ListSchedule& schedule);
CandidateList list_rec_bounded(const RealVec& y, int t, const ListSchedule& schedule,
                               OpCounter& ops);

// Maximum list size within relative squared radius delta (parameter sanity
// checks; spot-checked empirically against the oracle).
double list_size_bound(std::int64_t n, double delta);

// dist2 / d(BW_n)
double relative_dist2(double dist2, int t);

}  // namespace bw
