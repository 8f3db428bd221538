#pragma once

#include "mslope/edgepath.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mslope {

struct EnumerationLimits {
    size_t max_paths_per_tangle = 1 << 14;
    size_t max_candidates = 1 << 22;
};

// All basic leftward edgepaths of <f>: starting at <f>, each step moves to a
// Farey parent (denominator strictly decreases), stopping at the first
// integer vertex.  With minimality on, a step is skipped when the target is
// adjacent to the vertex two back (the path could cut the triangle).
std::vector<Edgepath> enumerate_basic_edgepaths(const Fraction& f, bool minimality = true,
                                                const EnumerationLimits& limits = {});

// Cap a basic path into a full candidate path: type III prepends <1/0>,
// type II prepends vertical edges from <0> up to the integer endpoint.
Edgepath complete_candidate(const Edgepath& basic, bool type_iii);

// Capped candidate paths for every tangle of the expression, one bucket per
// completion type.  Type II paths whose junction with the vertical run cuts
// a triangle are dropped when minimality is on.
struct CandidateSystems {
    std::vector<std::vector<Edgepath>> per_tangle_iii;
    std::vector<std::vector<Edgepath>> per_tangle_ii;

    size_t count_iii() const;
    size_t count_ii() const;
};

CandidateSystems assemble_candidate_systems(const MontesinosExpression& e,
                                            bool minimality = true,
                                            const EnumerationLimits& limits = {});

struct BoundsSweep {
    size_t candidates = 0;
    size_t violations = 0;
    bool any = false;
    i64 min_slope = 0;                    // over all candidates
    i64 max_slope = 0;
    std::vector<std::string> examples;    // first few violating systems
};

// R(candidate) = twist(candidate) - twist(Gamma_s) for every type II and
// type III candidate system of a knot expression, checked against
// [-2 C-, +2 C+].  Every product combination is visited.
BoundsSweep sweep_candidate_bounds(const MontesinosExpression& e, bool minimality = true,
                                   const EnumerationLimits& limits = {});

}  // namespace mslope
