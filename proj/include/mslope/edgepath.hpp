#pragma once

#include "mslope/diagram.hpp"
#include "mslope/fraction.hpp"
#include "mslope/montesinos.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mslope {

// A vertex of the curve-system diagram D.
//   Angle    <p/q>  at (u, v) = ((q-1)/q, p/q)
//   Circle   (p/q)  at (1, p/q), right edge
//   Infinity <1/0>  at (-1, 0)
struct DVertex {
    enum class Kind { Angle, Circle, Infinity };
    Kind kind = Kind::Angle;
    Fraction slope{0};                    // meaningless for Infinity

    Fraction u() const;
    Fraction v() const;
    std::string str() const;
    bool operator==(const DVertex& o) const;
    bool operator!=(const DVertex& o) const { return !(*this == o); }
};

DVertex angle_vertex(const Fraction& f);
DVertex circle_vertex(const Fraction& f);
DVertex infinity_vertex();

// Whether D has an edge between the two vertices.  <p/q>--<r/s> needs
// |ps - qr| = 1 (vertical edges between neighbouring integers included),
// <p/q>--(p/q) is the horizontal edge to the right boundary, and <1/0> is
// adjacent to exactly the integer vertices.
bool vertices_adjacent(const DVertex& a, const DVertex& b);

// Twist contribution of one edge, traversed right-to-left from `from`
// (nearer the start of the path) to `to`:
//   +2 if v strictly decreases, -2 if it increases, 0 for horizontal
//   edges and edges at <1/0>.
int edge_twist(const DVertex& from, const DVertex& to);

// An edgepath, stored with its left (far) end first; vertices.back() is the
// starting vertex.  Traversal order for twist purposes is back-to-front.
struct Edgepath {
    std::vector<DVertex> vertices;

    const DVertex& start() const { return vertices.back(); }
    const DVertex& end() const { return vertices.front(); }
    size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    void validate() const;                // consecutive vertices must be adjacent
    int twist() const;
    std::string str() const;              // "<0>--<1/3>--<2/5>", left end first
    bool operator==(const Edgepath& o) const { return vertices == o.vertices; }
};

enum class Direction { Increasing, Decreasing };

// lambda: repeated Farey-parent steps from <f> to the nearest integer vertex
// on the chosen side (larger parents for Increasing, smaller for Decreasing).
Edgepath monotone_basic_edgepath(const Fraction& f, Direction dir);

// gamma: lambda completed to a full system path.  On the side where the path
// would leave [0,1)+floor it gets the <1/0> edge, on the other side vertical
// edges down/up to <0>.
Edgepath monotone_edgepath(const Fraction& f, Direction dir);

// Reduced-diagram transforms; all preserve adjacency edge by edge.
Edgepath translated(const Edgepath& p, i64 a);        // x -> a + x
Edgepath inverted_shift(const Edgepath& p, i64 a);    // x -> 1/(a + x)
Edgepath negated(const Edgepath& p);                  // x -> -x

struct EdgepathSystem {
    std::vector<Edgepath> paths;

    int twist() const;
    std::string str() const;
};

// (Gamma_inc, Gamma_dec) for the expression's tangles.
std::pair<EdgepathSystem, EdgepathSystem> monotone_systems(const MontesinosExpression& e);

// The edgepath of the Seifert algorithm for one oriented tangle, built by
// the sign/type recursion over the suffix sub-tangles S_k, ..., S_2.
// lambda_prime covers the fractional tower; gamma adds the integer part and
// the <1/0> or vertical completion picked by the type of S_2.
Edgepath seifert_lambda_prime(const TangleOrientationData& data);
Edgepath seifert_gamma(const TangleOrientationData& data);

// Gamma_s: seifert_gamma of every tangle of an oriented closed diagram.
EdgepathSystem seifert_system(const Diagram& d);

struct SlopeBoundsReport {
    MontesinosExpression expression;
    KnotClass knot_class = KnotClass::Link;
    int c_plus = 0;
    int c_minus = 0;
    int twist_inc = 0;
    int twist_dec = 0;
    int twist_s = 0;
    i64 slope_lower = 0;                  // -2 C-
    i64 slope_upper = 0;                  // +2 C+
    int crossing_number = 0;              // C+ + C-
    i64 diameter_bound = 0;               // slope_upper - slope_lower
};

// Full pipeline for a knot expression: standard diagram, signed counts,
// the three systems, and the twist identities
//   twist(Gamma_inc) - twist(Gamma_s) = -2 C-
//   twist(Gamma_dec) - twist(Gamma_s) = +2 C+
// which are recomputed from scratch and enforced (logic_error on mismatch).
SlopeBoundsReport slope_bounds(const MontesinosExpression& e);

}  // namespace mslope
