#include "mslope/enumerate.hpp"
#include "mslope/report.hpp"
#include "mslope/svg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mslope;

namespace {

MontesinosExpression parsed(const std::string& text) {
    MontesinosExpression e = parse_expression(text);
    validate(e);
    return e;
}

}  // namespace

PYBIND11_MODULE(_mslope, m) {
    m.doc() = "Boundary-slope bounds for Montesinos knots";

    m.def("analyze_json", [](const std::string& text) {
        return to_json(analyze(parsed(text)));
    }, py::arg("expression"),
       "Full analysis of one knot expression as a JSON object string");

    m.def("slope_interval", [](const std::string& text) {
        SlopeBoundsReport r = slope_bounds(parsed(text));
        return py::make_tuple(r.slope_lower, r.slope_upper);
    }, py::arg("expression"), "(-2 C-, +2 C+) for a knot expression");

    m.def("crossing_counts", [](const std::string& text) {
        SlopeBoundsReport r = slope_bounds(parsed(text));
        return py::make_tuple(r.c_plus, r.c_minus);
    }, py::arg("expression"), "(C+, C-) of the oriented standard diagram");

    m.def("twists", [](const std::string& text) {
        SlopeBoundsReport r = slope_bounds(parsed(text));
        return py::make_tuple(r.twist_inc, r.twist_dec, r.twist_s);
    }, py::arg("expression"), "(twist(Gamma_inc), twist(Gamma_dec), twist(Gamma_s))");

    m.def("knot_class", [](const std::string& text) {
        return std::string(to_string(is_knot(parsed(text))));
    }, py::arg("expression"));

    m.def("restricted_form", [](const std::string& text) {
        RestrictedForm rf = to_restricted_expression(parsed(text));
        return py::make_tuple(std::string(to_string(rf.kind)), rf.expression.str());
    }, py::arg("expression"), "(kind, normalized expression)");

    m.def("continued_fraction", [](const std::string& fraction) {
        return standard_continued_fraction(parse_fraction(fraction)).str();
    }, py::arg("fraction"), "Standard expansion [a1,...,ak] of P/Q");

    m.def("enumerate_counts", [](const std::string& text, bool minimality) {
        CandidateSystems cs = assemble_candidate_systems(parsed(text), minimality);
        return py::make_tuple(cs.count_iii(), cs.count_ii());
    }, py::arg("expression"), py::arg("minimality") = true,
       "(number of type III systems, number of type II systems)");

    m.def("sweep_bounds", [](const std::string& text, bool minimality) {
        BoundsSweep sw = sweep_candidate_bounds(parsed(text), minimality);
        py::dict d;
        d["candidates"] = sw.candidates;
        d["violations"] = sw.violations;
        d["min_slope"] = sw.min_slope;
        d["max_slope"] = sw.max_slope;
        return d;
    }, py::arg("expression"), py::arg("minimality") = true,
       "Check every candidate system against the slope bounds");

    m.def("verify_random", [](size_t count, uint64_t seed, i64 max_denominator,
                              i64 max_magnitude, bool deep) {
        SplitMix64 rng(seed);
        RandomParams p;
        p.max_denominator = max_denominator;
        p.max_magnitude = max_magnitude;
        std::vector<MontesinosExpression> es;
        for (size_t i = 0; i < count; ++i) es.push_back(random_expression(rng, p));
        VerifyResult vr = verify_expressions(es, deep);
        return py::make_tuple(vr.checked, vr.failures);
    }, py::arg("count"), py::arg("seed") = 1, py::arg("max_denominator") = 12,
       py::arg("max_magnitude") = 4, py::arg("deep") = false,
       "(checked, failures) over `count` random knots");

    m.def("random_expressions", [](size_t count, uint64_t seed, i64 max_denominator,
                                   i64 max_magnitude) {
        SplitMix64 rng(seed);
        RandomParams p;
        p.max_denominator = max_denominator;
        p.max_magnitude = max_magnitude;
        std::vector<std::string> out;
        for (size_t i = 0; i < count; ++i) out.push_back(random_expression(rng, p).str());
        return out;
    }, py::arg("count"), py::arg("seed") = 1, py::arg("max_denominator") = 12,
       py::arg("max_magnitude") = 4);

    m.def("render_svg", [](const std::string& text) {
        return render_svg(analyze(parsed(text)));
    }, py::arg("expression"));

    m.def("pd_code", [](const std::string& text) {
        return Diagram::montesinos(parsed(text)).pd_code();
    }, py::arg("expression"));

    m.def("gauss_code", [](const std::string& text) {
        return Diagram::montesinos(parsed(text)).gauss_code();
    }, py::arg("expression"));
}
