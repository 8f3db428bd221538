#pragma once

#include "mslope/edgepath.hpp"
#include "mslope/enumerate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mslope {

// Error with the byte offset of the offending character in the input text.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// "P1/Q1,P2/Q2,..." with optional whitespace and an optional "M(...)"
// wrapper.  Validation of the tangle list itself (>= 3 entries, finite,
// non-integral) happens separately in validate().
MontesinosExpression parse_expression(const std::string& text);

struct AnalysisReport {
    MontesinosExpression expression;
    std::vector<ContinuedFraction> expansions;
    KnotClass knot_class = KnotClass::Link;
    RestrictedForm restricted;
    SlopeBoundsReport bounds;
    EdgepathSystem gamma_inc, gamma_dec, gamma_s;
    bool bounds_verified = false;
};

// The full pipeline for one knot expression; throws std::invalid_argument
// for links and malformed expressions.
AnalysisReport analyze(const MontesinosExpression& e);

enum class ReportFormat { Json, Csv, Plain };
ReportFormat parse_format(const std::string& name);   // "json" | "csv" | "plain"

std::string to_json(const AnalysisReport& r);         // single JSON object
std::string csv_header();
std::string to_csv_row(const AnalysisReport& r);
std::string to_plain(const AnalysisReport& r);

std::string render_reports(const std::vector<AnalysisReport>& rs, ReportFormat fmt);

// Deterministic 64-bit generator (splitmix64), identical streams on every
// platform; std::mt19937 would also be portable but its distributions are
// not, so sampling goes through explicit modular draws.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}
    uint64_t next();
    i64 uniform(i64 lo, i64 hi);          // inclusive bounds
};

struct RandomParams {
    int tangles_min = 3;
    int tangles_max = 6;
    i64 max_denominator = 12;
    i64 max_magnitude = 4;                // |Pi/Qi| <= max_magnitude
    bool require_knot = true;
};

MontesinosExpression random_expression(SplitMix64& rng, const RandomParams& p);

struct VerifyResult {
    size_t checked = 0;
    size_t failures = 0;
    std::vector<std::string> messages;    // first few failure descriptions
};

// Re-derives every identity the library promises for each expression:
// the twist identities of slope_bounds, orientation independence of
// twist(Gamma_s), mirror symmetry of the counts and bounds, restricted-form
// invariants, and (deep) the full candidate sweep.
VerifyResult verify_expressions(const std::vector<MontesinosExpression>& es, bool deep = false,
                                const EnumerationLimits& limits = {});

}  // namespace mslope
