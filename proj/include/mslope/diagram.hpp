#pragma once

#include "mslope/fraction.hpp"
#include "mslope/montesinos.hpp"

#include <array>
#include <string>
#include <vector>

namespace mslope {

// Oriented tangle homotopy classes (connectivity class x in-corner pattern).
//   connectivity 0: strands NW-NE, SW-SE (P even, Q odd)
//   connectivity inf: strands NW-SW, NE-SE (P odd, Q even)
//   connectivity 1: strands NW-SE, NE-SW (P odd, Q odd)
// H = flow enters on one side (left/right), V = enters on top/bottom,
// D = enters at diagonally opposite corners.
enum class OrientedTangleType { H0, D0, Vinf, Dinf, V1, H1 };
const char* to_string(OrientedTangleType t);
bool is_v_type(OrientedTangleType t);
bool is_d_type(OrientedTangleType t);
bool is_h_type(OrientedTangleType t);

enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

// Per-tangle data driving the Seifert edgepath recursion, always phrased for
// the positive tower |f| = [a1, a2, ..., ak]:
//   suffix_types[j-2] = oriented type of the sub-tangle S_j = [0, a_j, ..., a_k]
//   innermost_sign    = crossing sign of the standalone standard diagram of S_k
// For f < 0 the types come from the actual diagram (an in-plane mirror
// preserves oriented types) and the sign is flipped once.
struct TangleOrientationData {
    Fraction fraction;                    // the tangle's own fraction (signed)
    std::vector<i64> expansion;           // standard expansion of |fraction|
    std::vector<OrientedTangleType> suffix_types;
    OrientedTangleType whole_type;        // type of the tangle itself
    int innermost_sign;                   // +1 or -1
};

// Combinatorial crossing: four ports in cyclic order around the crossing.
// Slots 0..3; strands run through opposite slots (0-2 and 1-3).  `flip`
// records whether the stored order is counterclockwise as-is (false) or
// reversed (true); every NW-SE mirror of the diagram toggles it.
// `over_pair` = 0 if the 0-2 strand passes over, 1 for the 1-3 strand.
struct Crossing {
    int over_pair;
    bool flip;
    int level;        // depth of the term that created it: innermost term = 0
    int tangle;       // index within a Montesinos assembly, 0 for standalone
};

// A tangle diagram (4 open ends) or a closed Montesinos diagram.  Ports are
// numbered 4*crossing + slot; `link` joins ports by arcs, with negative
// codes -1-Corner marking the open ends of a tangle.
class Diagram {
public:
    // |a| crossings in a horizontal row; a = 0 gives the crossingless
    // 0-tangle.  Positive a puts the NW-SE strand on top at every crossing.
    static Diagram integer_tangle(i64 a);

    // One step of the standard-diagram recursion: mirror across the NW-SE
    // line, then attach an |a|-crossing row on the right.  [a1,...,ak]
    // becomes [a, a1, ..., ak]; the tracked fraction becomes a + 1/f.
    Diagram extended(i64 a) const;

    static Diagram standard_tangle(const ContinuedFraction& cf);
    static Diagram standard_tangle(const Fraction& f);

    // Standard closure: tangles side by side, tops joined, bottoms joined,
    // outer arcs closing the loop.
    static Diagram montesinos(const MontesinosExpression& e);

    static Diagram unknot();              // crossingless closed loop

    bool is_closed() const { return closed_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const Crossing& crossing(int c) const { return crossings_[c]; }
    int tangle_count() const { return static_cast<int>(tangles_.size()); }

    // Fraction reconstructed from the construction history; throws for
    // diagrams without one (e.g. imported PD codes).
    Fraction fraction() const;
    const std::vector<i64>& expansion_of(int tangle) const;
    Fraction tangle_fraction(int tangle) const;

    int count_components() const;

    // Closed diagrams: walk the single component, assign directions.
    // choice = 0/1 picks the two global orientations.
    void orient(int choice);
    // Tangle diagrams: the NW strand always runs into the tangle at NW;
    // choice picks the direction of the other strand.
    void orient_tangle(int choice);
    bool is_oriented() const { return oriented_; }

    int crossing_sign(int c) const;
    std::pair<int, int> signed_counts() const;              // (C+, C-) whole diagram
    std::pair<int, int> tangle_signed_counts(int tangle) const;

    OrientedTangleType classify() const;                    // whole oriented tangle
    OrientedTangleType tangle_type(int tangle) const;       // within an oriented closure
    std::vector<OrientedTangleType> subtangle_types(int tangle) const;
    TangleOrientationData orientation_data(int tangle) const;

    std::string pd_code() const;          // X[a,b,c,d] records, closed diagrams
    std::string gauss_code() const;       // signed Gauss code, closed 1-component
    static Diagram from_pd(const std::string& text);

private:
    std::vector<Crossing> crossings_;
    std::vector<int> link_;               // per port: port id, or -1-Corner
    std::array<int, 4> corner_{{-1, -1, -1, -1}};  // corner -> port id
    bool closed_ = false;
    bool crossingless_loop_ = false;

    bool oriented_ = false;
    std::vector<char> inbound_;           // per port, valid when oriented_

    struct TangleInfo {
        Fraction fraction;
        std::vector<i64> expansion;                  // of the fraction itself
        std::vector<std::array<int, 4>> xblocks;     // [d] = corners of d([a_{k-d}..a_k])
        std::array<int, 4> corners{{-1, -1, -1, -1}};
    };
    std::vector<TangleInfo> tangles_;

    std::vector<i64> history_;            // terms built so far, innermost first
    std::vector<std::array<int, 4>> xblocks_;

    int trace_block(int entry_port, const std::array<int, 4>& corners, int tangle,
                    int max_level) const;
    OrientedTangleType classify_corners(const std::array<int, 4>& ports,
                                        const std::array<int, 4>& pairing) const;
    void check_oriented() const;
    friend struct DiagramTestAccess;
};

}  // namespace mslope
