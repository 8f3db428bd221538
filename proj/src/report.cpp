#include "mslope/report.hpp"

#include <json.hpp>

#include <sstream>

namespace mslope {

using ordered_json = nlohmann::ordered_json;

namespace {

i64 parse_int(const std::string& text, size_t& i) {
    size_t start = i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a number", start);
    i64 v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > (i64)1 << 60)
            throw ParseError("number too large", start);
        ++i;
    }
    return neg ? -v : v;
}

void skip_ws(const std::string& text, size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

}  // namespace

MontesinosExpression parse_expression(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    bool wrapped = false;
    if (i + 1 < text.size() && (text[i] == 'M' || text[i] == 'm') && text[i + 1] == '(') {
        wrapped = true;
        i += 2;
    }
    MontesinosExpression e;
    for (;;) {
        skip_ws(text, i);
        i64 num = parse_int(text, i);
        i64 den = 1;
        skip_ws(text, i);
        if (i < text.size() && text[i] == '/') {
            ++i;
            skip_ws(text, i);
            den = parse_int(text, i);
        }
        if (den < 0) { den = -den; num = -num; }
        e.tangles.push_back(den == 0 ? Fraction::infinity() : Fraction(num, den));
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        break;
    }
    if (wrapped) {
        if (i >= text.size() || text[i] != ')')
            throw ParseError("expected ')'", i);
        ++i;
        skip_ws(text, i);
    }
    if (i != text.size())
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    return e;
}

AnalysisReport analyze(const MontesinosExpression& e) {
    validate(e);
    AnalysisReport r;
    r.expression = e;
    for (const auto& f : e.tangles)
        r.expansions.push_back(standard_continued_fraction(f));
    r.knot_class = is_knot(e);
    r.restricted = to_restricted_expression(e);
    r.bounds = slope_bounds(e);           // rejects links
    auto [inc, dec] = monotone_systems(e);
    r.gamma_inc = std::move(inc);
    r.gamma_dec = std::move(dec);
    Diagram d = Diagram::montesinos(e);
    d.orient(0);
    r.gamma_s = seifert_system(d);
    r.bounds_verified = true;             // slope_bounds enforced the identities
    return r;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "plain") return ReportFormat::Plain;
    throw std::invalid_argument("unknown format '" + name + "' (json, csv, plain)");
}

static ordered_json report_json(const AnalysisReport& r) {
    ordered_json j;
    j["expression"] = r.expression.str();
    ordered_json ts = ordered_json::array();
    for (size_t i = 0; i < r.expression.tangles.size(); ++i) {
        ordered_json t;
        t["fraction"] = r.expression.tangles[i].str();
        t["continued_fraction"] = r.expansions[i].str();
        ts.push_back(std::move(t));
    }
    j["tangles"] = std::move(ts);
    j["knot_class"] = to_string(r.knot_class);
    j["restricted"] = {{"kind", to_string(r.restricted.kind)},
                       {"expression", r.restricted.expression.str()}};
    j["C_plus"] = r.bounds.c_plus;
    j["C_minus"] = r.bounds.c_minus;
    j["twist_Gamma_inc"] = r.bounds.twist_inc;
    j["twist_Gamma_dec"] = r.bounds.twist_dec;
    j["twist_Gamma_s"] = r.bounds.twist_s;
    j["slope_lower"] = r.bounds.slope_lower;
    j["slope_upper"] = r.bounds.slope_upper;
    j["bounds_verified"] = r.bounds_verified;
    j["crossing_number"] = r.bounds.crossing_number;
    j["diameter_bound"] = r.bounds.diameter_bound;
    j["systems"] = {{"Gamma_inc", r.gamma_inc.str()},
                    {"Gamma_dec", r.gamma_dec.str()},
                    {"Gamma_s", r.gamma_s.str()}};
    return j;
}

std::string to_json(const AnalysisReport& r) { return report_json(r).dump(2); }

std::string csv_header() {
    return "expression,knot_class,restricted_kind,restricted_expression,C_plus,C_minus,"
           "twist_Gamma_inc,twist_Gamma_dec,twist_Gamma_s,slope_lower,slope_upper,"
           "bounds_verified,crossing_number,diameter_bound";
}

std::string to_csv_row(const AnalysisReport& r) {
    std::ostringstream out;
    out << '"' << r.expression.str() << '"' << ',' << to_string(r.knot_class) << ','
        << to_string(r.restricted.kind) << ',' << '"' << r.restricted.expression.str() << '"'
        << ',' << r.bounds.c_plus << ',' << r.bounds.c_minus << ',' << r.bounds.twist_inc << ','
        << r.bounds.twist_dec << ',' << r.bounds.twist_s << ',' << r.bounds.slope_lower << ','
        << r.bounds.slope_upper << ',' << (r.bounds_verified ? "true" : "false") << ','
        << r.bounds.crossing_number << ',' << r.bounds.diameter_bound;
    return out.str();
}

std::string to_plain(const AnalysisReport& r) {
    std::ostringstream out;
    out << "expression       M(" << r.expression.str() << ")\n";
    out << "tangles         ";
    for (size_t i = 0; i < r.expansions.size(); ++i)
        out << " " << r.expression.tangles[i].str() << "=" << r.expansions[i].str();
    out << "\n";
    out << "knot_class       " << to_string(r.knot_class) << "\n";
    out << "restricted       " << to_string(r.restricted.kind) << "  M("
        << r.restricted.expression.str() << ")\n";
    out << "crossings        C+=" << r.bounds.c_plus << "  C-=" << r.bounds.c_minus
        << "  total=" << r.bounds.crossing_number << "\n";
    out << "twists           inc=" << r.bounds.twist_inc << "  dec=" << r.bounds.twist_dec
        << "  seifert=" << r.bounds.twist_s << "\n";
    out << "slope_bounds     [" << r.bounds.slope_lower << ", " << r.bounds.slope_upper
        << "]  diameter=" << r.bounds.diameter_bound << "\n";
    out << "bounds_verified  " << (r.bounds_verified ? "true" : "false") << "\n";
    out << "Gamma_inc        " << r.gamma_inc.str() << "\n";
    out << "Gamma_dec        " << r.gamma_dec.str() << "\n";
    out << "Gamma_s          " << r.gamma_s.str() << "\n";
    return out.str();
}

std::string render_reports(const std::vector<AnalysisReport>& rs, ReportFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case ReportFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rs) arr.push_back(report_json(r));
            out << arr.dump(2) << "\n";
            break;
        }
        case ReportFormat::Csv:
            out << csv_header() << "\n";
            for (const auto& r : rs) out << to_csv_row(r) << "\n";
            break;
        case ReportFormat::Plain:
            for (size_t i = 0; i < rs.size(); ++i)
                out << (i ? "\n" : "") << to_plain(rs[i]);
            break;
    }
    return out.str();
}

uint64_t SplitMix64::next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

i64 SplitMix64::uniform(i64 lo, i64 hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    return lo + static_cast<i64>(next() % span);
}

MontesinosExpression random_expression(SplitMix64& rng, const RandomParams& p) {
    if (p.tangles_min < 3 || p.tangles_max < p.tangles_min || p.max_denominator < 2 ||
        p.max_magnitude < 1)
        throw std::invalid_argument("random_expression: bad parameters");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        MontesinosExpression e;
        int n = static_cast<int>(rng.uniform(p.tangles_min, p.tangles_max));
        while (static_cast<int>(e.tangles.size()) < n) {
            i64 q = rng.uniform(2, p.max_denominator);
            i64 num = rng.uniform(-p.max_magnitude * q + 1, p.max_magnitude * q - 1);
            if (num % q == 0) continue;
            e.tangles.push_back(Fraction(num, q));
        }
        if (!p.require_knot || is_knot(e) != KnotClass::Link) return e;
    }
    throw std::runtime_error("random_expression: could not generate a knot");
}

VerifyResult verify_expressions(const std::vector<MontesinosExpression>& es, bool deep,
                                const EnumerationLimits& limits) {
    VerifyResult vr;
    auto fail = [&](const MontesinosExpression& e, const std::string& what) {
        ++vr.failures;
        if (vr.messages.size() < 10) vr.messages.push_back(e.str() + ": " + what);
    };
    for (const auto& e : es) {
        ++vr.checked;
        try {
            validate(e);
            if (parse_expression(e.str()) != e)
                { fail(e, "expression text does not round-trip"); continue; }
            KnotClass kc = is_knot(e);
            RestrictedForm rf = to_restricted_expression(e);
            if (rf.expression.sum() != e.sum())
                { fail(e, "restricted form changes the fraction sum"); continue; }
            RestrictedForm again = to_restricted_expression(rf.expression);
            if (!(again.expression == rf.expression) || again.kind != rf.kind)
                { fail(e, "restricted form is not idempotent"); continue; }
            if (is_knot(rf.expression) != kc)
                { fail(e, "restricted form changes the knot class"); continue; }
            int cases = 0;
            bool allpos = true, allneg = true, small = true;
            for (const auto& f : rf.expression.tangles) {
                allpos = allpos && f > Fraction(0);
                allneg = allneg && f < Fraction(0);
                small = small && Fraction(-1) < f && f < Fraction(1);
            }
            cases = (allpos ? 1 : 0) + (allneg ? 1 : 0) + (!allpos && !allneg && small ? 1 : 0);
            if (cases != 1)
                { fail(e, "restricted form does not land in exactly one case"); continue; }

            if (kc == KnotClass::Link) continue;

            SlopeBoundsReport r = slope_bounds(e);   // twist identities enforced inside
            Diagram d = Diagram::montesinos(e);
            d.orient(1);
            auto [cp1, cm1] = d.signed_counts();
            if (cp1 != r.c_plus || cm1 != r.c_minus)
                { fail(e, "signed counts depend on the orientation choice"); continue; }
            if (seifert_system(d).twist() != r.twist_s)
                { fail(e, "twist(Gamma_s) depends on the orientation choice"); continue; }

            SlopeBoundsReport m = slope_bounds(mirror(e));
            if (m.c_plus != r.c_minus || m.c_minus != r.c_plus ||
                m.slope_lower != -r.slope_upper || m.slope_upper != -r.slope_lower)
                { fail(e, "mirror does not swap the counts and negate the bounds"); continue; }

            SlopeBoundsReport rr = slope_bounds(rf.expression);
            if (rr.crossing_number > r.crossing_number)
                { fail(e, "restricted form has more crossings"); continue; }

            if (deep) {
                BoundsSweep sw = sweep_candidate_bounds(e, true, limits);
                if (sw.violations)
                    fail(e, std::to_string(sw.violations) + " candidate systems out of bounds");
            }
        } catch (const std::exception& ex) {
            fail(e, ex.what());
        }
    }
    return vr;
}

}  // namespace mslope
