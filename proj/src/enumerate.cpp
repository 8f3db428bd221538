#include "mslope/enumerate.hpp"

#include <functional>

namespace mslope {

std::vector<Edgepath> enumerate_basic_edgepaths(const Fraction& f, bool minimality,
                                                const EnumerationLimits& limits) {
    if (f.is_infinity())
        throw std::invalid_argument("enumerate_basic_edgepaths: infinite fraction");
    std::vector<Edgepath> out;
    std::vector<DVertex> acc;             // start-first while searching
    acc.push_back(angle_vertex(f));
    std::function<void()> dfs = [&] {
        const DVertex& cur = acc.back();
        if (cur.slope.is_integer()) {
            if (out.size() >= limits.max_paths_per_tangle)
                throw std::runtime_error("enumerate_basic_edgepaths: more than " +
                                         std::to_string(limits.max_paths_per_tangle) +
                                         " paths for " + f.str());
            Edgepath p{std::vector<DVertex>(acc.rbegin(), acc.rend())};
            p.validate();
            out.push_back(std::move(p));
            return;
        }
        auto [sm, lg] = farey_parents(cur.slope);
        for (const Fraction& nxt : {sm, lg}) {
            DVertex v = angle_vertex(nxt);
            if (minimality && acc.size() >= 2 &&
                vertices_adjacent(acc[acc.size() - 2], v))
                continue;
            acc.push_back(v);
            dfs();
            acc.pop_back();
        }
    };
    dfs();
    return out;
}

Edgepath complete_candidate(const Edgepath& basic, bool type_iii) {
    if (basic.vertices.empty() || !basic.end().slope.is_integer())
        throw std::invalid_argument("complete_candidate: path does not end at an integer vertex");
    Edgepath p = basic;
    std::vector<DVertex> vs;
    if (type_iii) {
        vs.push_back(infinity_vertex());
    } else {
        i64 z = p.end().slope.num();
        i64 step = z > 0 ? 1 : -1;
        for (i64 w = 0; w != z; w += step) vs.push_back(angle_vertex(Fraction(w)));
    }
    vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
    p.vertices = std::move(vs);
    p.validate();
    return p;
}

size_t CandidateSystems::count_iii() const {
    size_t n = 1;
    for (const auto& b : per_tangle_iii) n *= b.size();
    return n;
}

size_t CandidateSystems::count_ii() const {
    size_t n = 1;
    for (const auto& b : per_tangle_ii) n *= b.size();
    return n;
}

CandidateSystems assemble_candidate_systems(const MontesinosExpression& e, bool minimality,
                                            const EnumerationLimits& limits) {
    validate(e);
    CandidateSystems cs;
    for (const Fraction& f : e.tangles) {
        auto basics = enumerate_basic_edgepaths(f, minimality, limits);
        std::vector<Edgepath> iii, ii;
        for (const auto& b : basics) {
            iii.push_back(complete_candidate(b, true));
            Edgepath capped = complete_candidate(b, false);
            if (minimality && b.end().slope.sign() != 0 && b.vertices.size() >= 2) {
                // triple (z -+ 1, z, x) around the junction: drop on a chord
                i64 z = b.end().slope.num();
                size_t j = static_cast<size_t>(z > 0 ? z : -z);
                const DVertex& before = capped.vertices[j - 1];
                const DVertex& after = capped.vertices[j + 1];
                if (vertices_adjacent(before, after)) continue;
            }
            ii.push_back(std::move(capped));
        }
        cs.per_tangle_iii.push_back(std::move(iii));
        cs.per_tangle_ii.push_back(std::move(ii));
    }
    return cs;
}

namespace {
void sweep_bucket(const std::vector<std::vector<Edgepath>>& buckets, i64 twist_s,
                  i64 lo, i64 hi, const EnumerationLimits& limits, BoundsSweep& sw) {
    const size_t n = buckets.size();
    std::vector<std::vector<int>> twists(n);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& p : buckets[i]) twists[i].push_back(p.twist());
        if (twists[i].empty()) return;    // no candidates of this type
    }
    std::vector<size_t> idx(n, 0);
    for (;;) {
        if (++sw.candidates > limits.max_candidates)
            throw std::runtime_error("sweep_candidate_bounds: more than " +
                                     std::to_string(limits.max_candidates) + " candidates");
        i64 t = 0;
        for (size_t i = 0; i < n; ++i) t += twists[i][idx[i]];
        i64 r = t - twist_s;
        if (!sw.any || r < sw.min_slope) sw.min_slope = r;
        if (!sw.any || r > sw.max_slope) sw.max_slope = r;
        sw.any = true;
        if (r < lo || r > hi) {
            ++sw.violations;
            if (sw.examples.size() < 5) {
                std::string s;
                for (size_t i = 0; i < n; ++i)
                    s += (i ? " ; " : "") + buckets[i][idx[i]].str();
                sw.examples.push_back("R=" + std::to_string(r) + "  " + s);
            }
        }
        size_t i = 0;
        while (i < n && ++idx[i] == buckets[i].size()) idx[i++] = 0;
        if (i == n) break;
    }
}
}  // namespace

BoundsSweep sweep_candidate_bounds(const MontesinosExpression& e, bool minimality,
                                   const EnumerationLimits& limits) {
    SlopeBoundsReport r = slope_bounds(e);
    CandidateSystems cs = assemble_candidate_systems(e, minimality, limits);
    BoundsSweep sw;
    sweep_bucket(cs.per_tangle_iii, r.twist_s, r.slope_lower, r.slope_upper, limits, sw);
    sweep_bucket(cs.per_tangle_ii, r.twist_s, r.slope_lower, r.slope_upper, limits, sw);
    return sw;
}

}  // namespace mslope
