#include "mslope/edgepath.hpp"

#include <sstream>

namespace mslope {

Fraction DVertex::u() const {
    switch (kind) {
        case Kind::Angle: return Fraction(slope.den() - 1, slope.den());
        case Kind::Circle: return Fraction(1);
        case Kind::Infinity: return Fraction(-1);
    }
    throw std::logic_error("DVertex::u");
}

Fraction DVertex::v() const {
    if (kind == Kind::Infinity)
        throw std::logic_error("DVertex::v: <1/0> has no v coordinate");
    return slope;
}

std::string DVertex::str() const {
    switch (kind) {
        case Kind::Angle: return "<" + slope.str() + ">";
        case Kind::Circle: return "(" + slope.str() + ")";
        case Kind::Infinity: return "<1/0>";
    }
    return "?";
}

bool DVertex::operator==(const DVertex& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Infinity) return true;
    return slope == o.slope;
}

DVertex angle_vertex(const Fraction& f) {
    if (f.is_infinity())
        throw std::invalid_argument("angle_vertex: 1/0 is not an angle vertex");
    return DVertex{DVertex::Kind::Angle, f};
}

DVertex circle_vertex(const Fraction& f) {
    if (f.is_infinity())
        throw std::invalid_argument("circle_vertex: 1/0 is not a circle vertex");
    return DVertex{DVertex::Kind::Circle, f};
}

DVertex infinity_vertex() { return DVertex{DVertex::Kind::Infinity, Fraction(0)}; }

bool vertices_adjacent(const DVertex& a, const DVertex& b) {
    using K = DVertex::Kind;
    if (a.kind == K::Infinity && b.kind == K::Infinity) return false;
    if (a.kind == K::Infinity) return b.kind == K::Angle && b.slope.is_integer();
    if (b.kind == K::Infinity) return a.kind == K::Angle && a.slope.is_integer();
    if (a.kind == K::Circle && b.kind == K::Circle) return false;
    if (a.kind == K::Circle || b.kind == K::Circle) {
        const DVertex& c = a.kind == K::Circle ? a : b;
        const DVertex& g = a.kind == K::Circle ? b : a;
        return g.slope == c.slope && !g.slope.is_integer();
    }
    if (a.slope == b.slope) return false;
    return farey_adjacent(a.slope, b.slope);
}

int edge_twist(const DVertex& from, const DVertex& to) {
    using K = DVertex::Kind;
    if (from.kind == K::Infinity || to.kind == K::Infinity) return 0;
    if (from.kind == K::Circle || to.kind == K::Circle) return 0;
    if (to.slope < from.slope) return 2;
    if (from.slope < to.slope) return -2;
    return 0;
}

void Edgepath::validate() const {
    if (vertices.empty())
        throw std::invalid_argument("edgepath: empty");
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!vertices_adjacent(vertices[i], vertices[i + 1]))
            throw std::invalid_argument("edgepath: " + vertices[i].str() + " and " +
                                        vertices[i + 1].str() + " are not adjacent in D");
}

int Edgepath::twist() const {
    int t = 0;
    for (size_t i = vertices.size(); i-- > 1;)
        t += edge_twist(vertices[i], vertices[i - 1]);
    return t;
}

std::string Edgepath::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < vertices.size(); ++i)
        out << (i ? "--" : "") << vertices[i].str();
    return out.str();
}

Edgepath monotone_basic_edgepath(const Fraction& f, Direction dir) {
    if (f.is_infinity())
        throw std::invalid_argument("monotone_basic_edgepath: infinite fraction");
    std::vector<DVertex> rev;             // start first, reversed at the end
    Fraction cur = f;
    rev.push_back(angle_vertex(cur));
    while (!cur.is_integer()) {
        auto [sm, lg] = farey_parents(cur);
        cur = dir == Direction::Increasing ? lg : sm;
        rev.push_back(angle_vertex(cur));
    }
    Edgepath p{std::vector<DVertex>(rev.rbegin(), rev.rend())};
    p.validate();
    return p;
}

Edgepath monotone_edgepath(const Fraction& f, Direction dir) {
    Edgepath p = monotone_basic_edgepath(f, dir);
    // completion side: paths that stop at an integer away from 0 descend to
    // <0> through vertical edges; the other direction caps with <1/0>
    bool cap_with_infinity =
        (f >= Fraction(0)) == (dir == Direction::Increasing);
    if (cap_with_infinity) {
        std::vector<DVertex> vs;
        vs.push_back(infinity_vertex());
        vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
        p.vertices = std::move(vs);
    } else {
        i64 z = p.end().slope.num();      // end vertex is an integer
        std::vector<DVertex> vs;
        i64 step = z > 0 ? 1 : -1;
        for (i64 w = 0; w != z; w += step) vs.push_back(angle_vertex(Fraction(w)));
        vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
        p.vertices = std::move(vs);
    }
    p.validate();
    return p;
}

Edgepath translated(const Edgepath& p, i64 a) {
    Edgepath out = p;
    for (auto& v : out.vertices)
        if (v.kind != DVertex::Kind::Infinity) v.slope = v.slope + Fraction(a);
    return out;
}

Edgepath inverted_shift(const Edgepath& p, i64 a) {
    Edgepath out = p;
    for (auto& v : out.vertices) {
        if (v.kind == DVertex::Kind::Infinity)
            throw std::invalid_argument("inverted_shift: path contains <1/0>");
        Fraction x = v.slope + Fraction(a);
        v.slope = x.sign() == 0 ? Fraction::infinity() : x.reciprocal();
        if (v.slope.is_infinity())
            throw std::invalid_argument("inverted_shift: hit 1/0");
    }
    return out;
}

Edgepath negated(const Edgepath& p) {
    Edgepath out = p;
    for (auto& v : out.vertices)
        if (v.kind != DVertex::Kind::Infinity) v.slope = -v.slope;
    return out;
}

int EdgepathSystem::twist() const {
    int t = 0;
    for (const auto& p : paths) t += p.twist();
    return t;
}

std::string EdgepathSystem::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < paths.size(); ++i)
        out << (i ? " ; " : "") << paths[i].str();
    return out.str();
}

std::pair<EdgepathSystem, EdgepathSystem> monotone_systems(const MontesinosExpression& e) {
    EdgepathSystem inc, dec;
    for (const auto& f : e.tangles) {
        inc.paths.push_back(monotone_edgepath(f, Direction::Increasing));
        dec.paths.push_back(monotone_edgepath(f, Direction::Decreasing));
    }
    return {inc, dec};
}

Edgepath seifert_lambda_prime(const TangleOrientationData& data) {
    const auto& a = data.expansion;       // positive tower [a1, ..., ak]
    const size_t k = a.size();
    if (k < 2)
        throw std::invalid_argument("seifert_lambda_prime: integral tangle");

    Edgepath path;
    i64 ak = a[k - 1];
    if (data.innermost_sign > 0) {
        for (i64 i = 1; i <= ak; ++i)
            path.vertices.push_back(angle_vertex(Fraction(1, i)));
    } else {
        path.vertices.push_back(angle_vertex(Fraction(0)));
        path.vertices.push_back(angle_vertex(Fraction(1, ak)));
    }

    for (size_t j = k - 1; j >= 2; --j) {
        OrientedTangleType inner = data.suffix_types.at(j + 1 - 2);  // type of S_{j+1}
        i64 aj = a[j - 1];
        const DVertex& front = path.end();
        if (is_v_type(inner)) {
            if (front != angle_vertex(Fraction(1)))
                throw std::logic_error("seifert recursion: V-typed sub-tangle but path ends at " +
                                       front.str());
        } else {
            if (front != angle_vertex(Fraction(0)))
                throw std::logic_error("seifert recursion: " +
                                       std::string(to_string(inner)) +
                                       "-typed sub-tangle but path ends at " + front.str());
        }
        Edgepath mapped = inverted_shift(path, aj);
        std::vector<DVertex> vs;
        if (is_h_type(inner)) {
            for (i64 i = 1; i < aj; ++i) vs.push_back(angle_vertex(Fraction(1, i)));
        } else {
            vs.push_back(angle_vertex(Fraction(0)));
        }
        vs.insert(vs.end(), mapped.vertices.begin(), mapped.vertices.end());
        path.vertices = std::move(vs);
    }
    path.validate();
    return path;
}

Edgepath seifert_gamma(const TangleOrientationData& data) {
    Edgepath lp = seifert_lambda_prime(data);
    i64 z = data.expansion.front();       // >= 0 in the positive tower
    OrientedTangleType s2 = data.suffix_types.front();
    Edgepath shifted = translated(lp, z);
    std::vector<DVertex> vs;
    if (is_h_type(s2)) {
        for (i64 w = 0; w < z; ++w) vs.push_back(angle_vertex(Fraction(w)));
    } else {
        vs.push_back(infinity_vertex());
    }
    vs.insert(vs.end(), shifted.vertices.begin(), shifted.vertices.end());
    Edgepath out{std::move(vs)};
    if (data.fraction < Fraction(0)) out = negated(out);
    out.validate();
    if (out.start() != angle_vertex(data.fraction))
        throw std::logic_error("seifert_gamma: path does not start at " + data.fraction.str());
    return out;
}

EdgepathSystem seifert_system(const Diagram& d) {
    if (!d.is_closed())
        throw std::invalid_argument("seifert_system: open tangle diagram");
    EdgepathSystem sys;
    for (int t = 0; t < d.tangle_count(); ++t)
        sys.paths.push_back(seifert_gamma(d.orientation_data(t)));
    return sys;
}

SlopeBoundsReport slope_bounds(const MontesinosExpression& e) {
    validate(e);
    KnotClass kc = is_knot(e);
    if (kc == KnotClass::Link)
        throw std::invalid_argument("slope_bounds: " + e.str() +
                                    " is a link, not a knot");
    Diagram d = Diagram::montesinos(e);
    d.orient(0);
    auto [cp, cm] = d.signed_counts();
    auto [inc, dec] = monotone_systems(e);
    EdgepathSystem gs = seifert_system(d);

    SlopeBoundsReport r;
    r.expression = e;
    r.knot_class = kc;
    r.c_plus = cp;
    r.c_minus = cm;
    r.twist_inc = inc.twist();
    r.twist_dec = dec.twist();
    r.twist_s = gs.twist();
    if (r.twist_inc - r.twist_s != -2 * cm)
        throw std::logic_error("twist identity broken for " + e.str() +
                               ": twist(Gamma_inc) - twist(Gamma_s) = " +
                               std::to_string(r.twist_inc - r.twist_s) +
                               ", expected " + std::to_string(-2 * cm));
    if (r.twist_dec - r.twist_s != 2 * cp)
        throw std::logic_error("twist identity broken for " + e.str() +
                               ": twist(Gamma_dec) - twist(Gamma_s) = " +
                               std::to_string(r.twist_dec - r.twist_s) +
                               ", expected " + std::to_string(2 * cp));
    r.slope_lower = -2 * cm;
    r.slope_upper = 2 * cp;
    r.crossing_number = cp + cm;
    r.diameter_bound = r.slope_upper - r.slope_lower;
    return r;
}

}  // namespace mslope
