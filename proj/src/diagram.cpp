#include "mslope/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

namespace mslope {

const char* to_string(OrientedTangleType t) {
    switch (t) {
        case OrientedTangleType::H0: return "H0";
        case OrientedTangleType::D0: return "D0";
        case OrientedTangleType::Vinf: return "Vinf";
        case OrientedTangleType::Dinf: return "Dinf";
        case OrientedTangleType::V1: return "V1";
        case OrientedTangleType::H1: return "H1";
    }
    return "?";
}

bool is_v_type(OrientedTangleType t) {
    return t == OrientedTangleType::Vinf || t == OrientedTangleType::V1;
}
bool is_d_type(OrientedTangleType t) {
    return t == OrientedTangleType::Dinf || t == OrientedTangleType::D0;
}
bool is_h_type(OrientedTangleType t) {
    return t == OrientedTangleType::H0 || t == OrientedTangleType::H1;
}

// Row slots: 0 = east-up, 1 = west-up, 2 = west-down, 3 = east-down;
// counterclockwise when flip is false.  The strand through slots 0-2 rises
// left-to-right, the one through 1-3 falls.
namespace {
constexpr int kEu = 0, kWu = 1, kWd = 2, kEd = 3;
inline int through(int port) { return port ^ 2; }
inline int corner_code(int c) { return -1 - c; }
}  // namespace

Diagram Diagram::integer_tangle(i64 a) {
    Diagram d;
    d.history_ = {a};
    int m = static_cast<int>(a < 0 ? -a : a);
    if (m == 0) {
        // crossingless 0-tangle: NW joins NE, SW joins SE directly
        d.xblocks_.push_back(d.corner_);
        d.tangles_ = {TangleInfo{Fraction(0), {0}, d.xblocks_, d.corner_}};
        return d;
    }
    int over = a > 0 ? 1 : 0;
    d.crossings_.assign(m, Crossing{over, false, 0, 0});
    d.link_.assign(4 * m, -9);
    auto join = [&](int x, int y) { d.link_[x] = y; d.link_[y] = x; };
    for (int i = 0; i + 1 < m; ++i) {
        join(4 * i + kEu, 4 * (i + 1) + kWu);
        join(4 * i + kEd, 4 * (i + 1) + kWd);
    }
    d.corner_ = {4 * 0 + kWu, 4 * (m - 1) + kEu, 4 * 0 + kWd, 4 * (m - 1) + kEd};
    for (int c = 0; c < 4; ++c) d.link_[d.corner_[c]] = corner_code(c);
    d.xblocks_.push_back(d.corner_);
    d.tangles_ = {TangleInfo{Fraction(a), {a}, d.xblocks_, d.corner_}};
    return d;
}

Diagram Diagram::extended(i64 a) const {
    if (closed_)
        throw std::invalid_argument("extend: closed diagram");
    if (crossings_.empty())
        throw std::invalid_argument("extend: crossingless base tangle unsupported");
    Diagram d = *this;
    d.oriented_ = false;
    d.inbound_.clear();
    // mirror across the NW-SE line: reverse every cyclic order, swap NE/SW
    for (auto& c : d.crossings_) c.flip = !c.flip;
    std::swap(d.corner_[NE], d.corner_[SW]);
    d.link_[d.corner_[NE]] = corner_code(NE);
    d.link_[d.corner_[SW]] = corner_code(SW);

    int m = static_cast<int>(a < 0 ? -a : a);
    int depth = static_cast<int>(d.history_.size());
    if (m > 0) {
        int base = d.crossing_count();
        int over = a > 0 ? 1 : 0;
        d.crossings_.insert(d.crossings_.end(), m, Crossing{over, false, depth, 0});
        d.link_.resize(4 * (base + m), -9);
        auto join = [&](int x, int y) { d.link_[x] = y; d.link_[y] = x; };
        for (int i = base; i + 1 < base + m; ++i) {
            join(4 * i + kEu, 4 * (i + 1) + kWu);
            join(4 * i + kEd, 4 * (i + 1) + kWd);
        }
        join(d.corner_[NE], 4 * base + kWu);
        join(d.corner_[SE], 4 * base + kWd);
        d.corner_[NE] = 4 * (base + m - 1) + kEu;
        d.corner_[SE] = 4 * (base + m - 1) + kEd;
        d.link_[d.corner_[NE]] = corner_code(NE);
        d.link_[d.corner_[SE]] = corner_code(SE);
    }
    d.history_.push_back(a);
    d.xblocks_.push_back(d.corner_);
    std::vector<i64> expansion(d.history_.rbegin(), d.history_.rend());
    Fraction f = evaluate_continued_fraction(ContinuedFraction{expansion});
    d.tangles_ = {TangleInfo{f, expansion, d.xblocks_, d.corner_}};
    return d;
}

Diagram Diagram::standard_tangle(const ContinuedFraction& cf) {
    if (!is_standard_form(cf))
        throw std::invalid_argument("standard_tangle: expansion not in standard form " + cf.str());
    Diagram d = integer_tangle(cf.terms.back());
    for (size_t i = cf.terms.size() - 1; i-- > 0;)
        d = d.extended(cf.terms[i]);
    return d;
}

Diagram Diagram::standard_tangle(const Fraction& f) {
    return standard_tangle(standard_continued_fraction(f));
}

Diagram Diagram::montesinos(const MontesinosExpression& e) {
    validate(e);
    Diagram d;
    d.closed_ = true;
    std::vector<std::array<int, 4>> tcorners;
    for (size_t i = 0; i < e.tangles.size(); ++i) {
        Diagram t = standard_tangle(e.tangles[i]);
        int off = d.crossing_count();
        auto remap = [off](int p) { return p + 4 * off; };
        for (auto& c : t.crossings_) c.tangle = static_cast<int>(i);
        d.crossings_.insert(d.crossings_.end(), t.crossings_.begin(), t.crossings_.end());
        d.link_.resize(4 * d.crossing_count(), -9);
        for (int p = 0; p < 4 * t.crossing_count(); ++p)
            d.link_[remap(p)] = t.link_[p] >= 0 ? remap(t.link_[p]) : t.link_[p];
        TangleInfo info = t.tangles_[0];
        for (auto& b : info.xblocks)
            for (auto& p : b) p = remap(p);
        for (auto& p : info.corners) p = remap(p);
        d.tangles_.push_back(info);
        tcorners.push_back(info.corners);
    }
    // tops joined left to right, bottoms joined, outer arcs close the loop
    const size_t n = tcorners.size();
    auto join = [&](int x, int y) { d.link_[x] = y; d.link_[y] = x; };
    for (size_t i = 0; i < n; ++i) {
        join(tcorners[i][NE], tcorners[(i + 1) % n][NW]);
        join(tcorners[i][SE], tcorners[(i + 1) % n][SW]);
    }
    return d;
}

Diagram Diagram::unknot() {
    Diagram d;
    d.closed_ = true;
    d.crossingless_loop_ = true;
    d.oriented_ = true;
    return d;
}

Fraction Diagram::fraction() const {
    if (closed_)
        throw std::invalid_argument("fraction: closed diagram");
    if (history_.empty())
        throw std::invalid_argument("fraction: diagram has no construction history");
    std::vector<i64> expansion(history_.rbegin(), history_.rend());
    return evaluate_continued_fraction(ContinuedFraction{expansion});
}

const std::vector<i64>& Diagram::expansion_of(int tangle) const {
    return tangles_.at(tangle).expansion;
}

Fraction Diagram::tangle_fraction(int tangle) const {
    return tangles_.at(tangle).fraction;
}

int Diagram::count_components() const {
    if (!closed_)
        throw std::invalid_argument("count_components: open tangle diagram");
    if (crossingless_loop_) return 1;
    int n = 4 * crossing_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int p = 0; p < n; ++p) {
        unite(p, through(p));
        unite(p, link_[p]);
    }
    int comps = 0;
    for (int p = 0; p < n; ++p)
        if (find(p) == p) ++comps;
    return comps;
}

void Diagram::orient(int choice) {
    if (!closed_)
        throw std::invalid_argument("orient: open tangle diagram, use orient_tangle");
    if (crossingless_loop_) { oriented_ = true; return; }
    if (count_components() != 1)
        throw std::invalid_argument("orient: diagram has more than one component");
    inbound_.assign(4 * crossing_count(), 0);
    int p = 0;
    do {
        inbound_[p] = 1;
        int e = through(p);
        inbound_[e] = 0;
        p = link_[e];
    } while (p != 0);
    if (choice)
        for (auto& b : inbound_) b = !b;
    oriented_ = true;
}

void Diagram::orient_tangle(int choice) {
    if (closed_)
        throw std::invalid_argument("orient_tangle: closed diagram, use orient");
    if (crossings_.empty())
        throw std::invalid_argument("orient_tangle: crossingless tangle");
    inbound_.assign(4 * crossing_count(), 0);
    auto walk = [&](int corner, std::vector<int>* touched) -> int {
        int p = corner_[corner];
        for (;;) {
            inbound_[p] = 1;
            if (touched) touched->push_back(p);
            int e = through(p);
            inbound_[e] = 0;
            if (touched) touched->push_back(e);
            int nxt = link_[e];
            if (nxt < 0) return -1 - nxt;
            p = nxt;
        }
    };
    int exit1 = walk(NW, nullptr);
    int second = -1;
    for (int c : {NE, SW, SE})
        if (c != exit1) { second = c; break; }
    std::vector<int> touched;
    walk(second, &touched);
    if (choice)
        for (int p : touched) inbound_[p] = !inbound_[p];
    oriented_ = true;
}

void Diagram::check_oriented() const {
    if (!oriented_)
        throw std::invalid_argument("diagram is not oriented");
}

int Diagram::crossing_sign(int c) const {
    check_oriented();
    const Crossing& x = crossings_[c];
    bool a0 = inbound_[4 * c + 0], a2 = inbound_[4 * c + 2];
    bool b1 = inbound_[4 * c + 1], b3 = inbound_[4 * c + 3];
    if (a0 == a2 || b1 == b3)
        throw std::logic_error("crossing_sign: inconsistent strand orientation");
    int alpha = a0 ? 0 : 1;
    int beta_slot = x.flip ? 3 : 1;
    int beta = inbound_[4 * c + beta_slot] ? 0 : 1;
    int s = (alpha == beta) ? 1 : -1;
    return x.over_pair == 1 ? s : -s;
}

std::pair<int, int> Diagram::signed_counts() const {
    check_oriented();
    int plus = 0, minus = 0;
    for (int c = 0; c < crossing_count(); ++c)
        (crossing_sign(c) > 0 ? plus : minus)++;
    return {plus, minus};
}

std::pair<int, int> Diagram::tangle_signed_counts(int tangle) const {
    check_oriented();
    int plus = 0, minus = 0;
    for (int c = 0; c < crossing_count(); ++c)
        if (crossings_[c].tangle == tangle)
            (crossing_sign(c) > 0 ? plus : minus)++;
    return {plus, minus};
}

int Diagram::trace_block(int entry_port, const std::array<int, 4>& corners, int tangle,
                         int max_level) const {
    int cur = entry_port;
    for (;;) {
        int e = through(cur);
        if (e == corners[0] || e == corners[1] || e == corners[2] || e == corners[3])
            return e;
        int nxt = link_[e];
        if (nxt < 0)
            throw std::logic_error("trace_block: escaped through an open end");
        const Crossing& x = crossings_[nxt / 4];
        if (x.tangle != tangle || x.level > max_level)
            throw std::logic_error("trace_block: escaped the sub-tangle");
        cur = nxt;
    }
}

OrientedTangleType Diagram::classify_corners(const std::array<int, 4>& ports,
                                             const std::array<int, 4>& pairing) const {
    check_oriented();
    int in_mask = 0, in_count = 0;
    for (int c = 0; c < 4; ++c)
        if (inbound_[ports[c]]) { in_mask |= 1 << c; ++in_count; }
    if (in_count != 2)
        throw std::logic_error("classify: inconsistent boundary orientation");
    const int mNW = 1 << NW, mNE = 1 << NE, mSW = 1 << SW, mSE = 1 << SE;
    const int side = mNW | mSW, topbot = mNW | mNE, diag = mNW | mSE;
    auto is = [&](int mask) { return in_mask == mask || in_mask == (15 ^ mask); };
    switch (pairing[NW]) {
        case NE:  // strands NW-NE, SW-SE
            if (is(side)) return OrientedTangleType::H0;
            if (is(diag)) return OrientedTangleType::D0;
            break;
        case SW:  // strands NW-SW, NE-SE
            if (is(topbot)) return OrientedTangleType::Vinf;
            if (is(diag)) return OrientedTangleType::Dinf;
            break;
        case SE:  // strands NW-SE, NE-SW
            if (is(topbot)) return OrientedTangleType::V1;
            if (is(side)) return OrientedTangleType::H1;
            break;
    }
    throw std::logic_error("classify: impossible in/out pattern for the connectivity");
}

OrientedTangleType Diagram::classify() const {
    if (closed_)
        throw std::invalid_argument("classify: closed diagram");
    return tangle_type(0);
}

OrientedTangleType Diagram::tangle_type(int tangle) const {
    check_oriented();
    const TangleInfo& info = tangles_.at(tangle);
    std::array<int, 4> pairing{{-1, -1, -1, -1}};
    for (int c = 0; c < 4; ++c) {
        if (pairing[c] >= 0) continue;
        int exit_port = trace_block(info.corners[c], info.corners, tangle, INT_MAX);
        int e = static_cast<int>(std::find(info.corners.begin(), info.corners.end(), exit_port) -
                                 info.corners.begin());
        pairing[c] = e;
        pairing[e] = c;
    }
    return classify_corners(info.corners, pairing);
}

std::vector<OrientedTangleType> Diagram::subtangle_types(int tangle) const {
    check_oriented();
    const TangleInfo& info = tangles_.at(tangle);
    const size_t k = info.expansion.size();
    if (k < 2)
        throw std::invalid_argument("subtangle_types: integral tangle");
    std::vector<OrientedTangleType> out;
    for (size_t j = 2; j <= k; ++j) {
        int depth = static_cast<int>(k - j);
        const auto& x = info.xblocks.at(depth);
        // S_j is the NW-SE mirror of the recorded block: NE and SW swap roles
        std::array<int, 4> ports{{x[NW], x[SW], x[NE], x[SE]}};
        std::array<int, 4> pairing{{-1, -1, -1, -1}};
        for (int c = 0; c < 4; ++c) {
            if (pairing[c] >= 0) continue;
            int exit_port = trace_block(ports[c], ports, tangle, depth);
            int e = static_cast<int>(std::find(ports.begin(), ports.end(), exit_port) -
                                     ports.begin());
            pairing[c] = e;
            pairing[e] = c;
        }
        out.push_back(classify_corners(ports, pairing));
    }
    return out;
}

TangleOrientationData Diagram::orientation_data(int tangle) const {
    check_oriented();
    const TangleInfo& info = tangles_.at(tangle);
    const size_t k = info.expansion.size();
    if (k < 2)
        throw std::invalid_argument("orientation_data: integral tangle");
    TangleOrientationData d;
    d.fraction = info.fraction;
    bool negative = info.fraction < Fraction(0);
    d.expansion = info.expansion;
    if (negative)
        for (auto& t : d.expansion) t = -t;
    d.suffix_types = subtangle_types(tangle);
    d.whole_type = tangle_type(tangle);
    int amb = 0;
    for (int c = 0; c < crossing_count(); ++c) {
        if (crossings_[c].tangle != tangle || crossings_[c].level != 0) continue;
        int s = crossing_sign(c);
        if (amb == 0) amb = s;
        else if (amb != s)
            throw std::logic_error("orientation_data: innermost block sign not uniform");
    }
    if (amb == 0)
        throw std::logic_error("orientation_data: empty innermost block");
    int sign_std = (k % 2 == 0) ? amb : -amb;
    if (negative) sign_std = -sign_std;
    d.innermost_sign = sign_std;
    return d;
}

// --- PD / Gauss export -----------------------------------------------------

namespace {
// Arc labels along each component; label stored at both the exit port that
// starts the arc and the entry port that ends it.
void number_edges(const std::vector<int>& link, int nports,
                  const std::vector<char>& inbound, std::vector<int>& label) {
    label.assign(nports, 0);
    std::vector<char> seen(nports, 0);
    int next = 1;
    for (int start = 0; start < nports; ++start) {
        if (seen[start] || !inbound[start]) continue;
        // walk the component beginning with the arc that ENDS at `start`
        int p = start;
        do {
            seen[p] = 1;
            int e = through(p);
            seen[e] = 1;
            label[e] = next;
            label[link[e]] = next;
            ++next;
            p = link[e];
        } while (p != start);
    }
}
}  // namespace

std::string Diagram::pd_code() const {
    if (!closed_)
        throw std::invalid_argument("pd_code: open tangle diagram");
    if (crossingless_loop_ || crossings_.empty()) return "";
    Diagram d = *this;
    if (!d.oriented_ || d.inbound_.empty()) {
        // orient every component independently for export
        int n = 4 * d.crossing_count();
        d.inbound_.assign(n, 0);
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            int p = s;
            do {
                seen[p] = 1;
                d.inbound_[p] = 1;
                int e = through(p);
                seen[e] = 1;
                d.inbound_[e] = 0;
                p = d.link_[e];
            } while (p != s);
        }
        d.oriented_ = true;
    }
    std::vector<int> label;
    number_edges(d.link_, 4 * d.crossing_count(), d.inbound_, label);
    std::ostringstream out;
    for (int c = 0; c < d.crossing_count(); ++c) {
        const Crossing& x = d.crossings_[c];
        int u0 = x.over_pair == 0 ? 1 : 0;  // a slot of the under strand
        int in_slot = d.inbound_[4 * c + u0] ? u0 : through(u0) & 3;
        out << (c ? " " : "") << "X[";
        int step = x.flip ? 3 : 1;          // counterclockwise successor
        for (int i = 0; i < 4; ++i) {
            int slot = (in_slot + i * step) % 4;
            out << label[4 * c + slot] << (i < 3 ? "," : "]");
        }
    }
    return out.str();
}

std::string Diagram::gauss_code() const {
    if (!closed_)
        throw std::invalid_argument("gauss_code: open tangle diagram");
    if (crossingless_loop_ || crossings_.empty()) return "";
    if (count_components() != 1)
        throw std::invalid_argument("gauss_code: diagram is not a knot");
    Diagram d = *this;
    if (!d.oriented_) d.orient(0);
    std::vector<int> visit(d.crossing_count(), 0);
    int next = 1;
    std::ostringstream out;
    int p = 0;
    bool first = true;
    do {
        int c = p / 4;
        if (!visit[c]) visit[c] = next++;
        bool over = (d.crossings_[c].over_pair == 0) == ((p & 3) == 0 || (p & 3) == 2);
        if (!first) out << " ";
        first = false;
        out << (over ? "O" : "U") << visit[c] << (d.crossing_sign(c) > 0 ? "+" : "-");
        p = d.link_[through(p)];
    } while (p != 0);
    return out.str();
}

Diagram Diagram::from_pd(const std::string& text) {
    Diagram d;
    d.closed_ = true;
    std::map<int, std::vector<int>> ends;  // edge label -> ports
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != 'X')
            throw std::invalid_argument("from_pd: expected 'X' at offset " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] != '[')
            throw std::invalid_argument("from_pd: expected '[' at offset " + std::to_string(i));
        ++i;
        int c = d.crossing_count();
        d.crossings_.push_back(Crossing{1, false, 0, 0});  // under strand = slots 0,2
        for (int s = 0; s < 4; ++s) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])))) ++j;
            if (j == i)
                throw std::invalid_argument("from_pd: expected edge label at offset " +
                                            std::to_string(i));
            int lab = std::stoi(text.substr(i, j - i));
            ends[lab].push_back(4 * c + s);
            i = j;
            char want = s < 3 ? ',' : ']';
            if (i >= text.size() || text[i] != want)
                throw std::invalid_argument("from_pd: expected '" + std::string(1, want) +
                                            "' at offset " + std::to_string(i));
            ++i;
        }
        skip_ws();
    }
    d.link_.assign(4 * d.crossing_count(), -9);
    for (const auto& [lab, ports] : ends) {
        if (ports.size() != 2)
            throw std::invalid_argument("from_pd: edge " + std::to_string(lab) +
                                        " has " + std::to_string(ports.size()) + " ends");
        d.link_[ports[0]] = ports[1];
        d.link_[ports[1]] = ports[0];
    }
    if (d.crossings_.empty()) d.crossingless_loop_ = true;
    return d;
}

}  // namespace mslope
