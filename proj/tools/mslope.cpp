#include "mslope/enumerate.hpp"
#include "mslope/report.hpp"
#include "mslope/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace mslope;

namespace {

bool log_enabled() {
    const char* v = std::getenv("MSLOPE_LOG");
    return v && *v && std::string(v) != "0";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "[mslope] " << msg << "\n";
}

std::vector<MontesinosExpression> gather(const std::vector<std::string>& exprs,
                                         const std::string& file) {
    std::vector<MontesinosExpression> out;
    for (const auto& t : exprs) out.push_back(parse_expression(t));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw std::runtime_error("cannot open " + file);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line[a] == '#') continue;
            try {
                out.push_back(parse_expression(line));
            } catch (const ParseError& pe) {
                throw std::runtime_error(file + ":" + std::to_string(lineno) + ": " + pe.what());
            }
        }
    }
    return out;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
    log_line("wrote " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-slope bounds for Montesinos knots"};
    app.require_subcommand(1);

    std::vector<std::string> exprs;
    std::string file, format = "plain", out_path;
    bool restricted_only = false;

    auto* analyze_cmd = app.add_subcommand("analyze",
        "Crossing counts, edgepath systems and slope bounds for knot expressions");
    analyze_cmd->add_option("expressions", exprs, "expressions like 1/2,1/3,-2/3");
    analyze_cmd->add_option("--file", file, "file with one expression per line");
    analyze_cmd->add_option("--format", format, "json, csv or plain")->capture_default_str();
    analyze_cmd->add_option("--out", out_path, "output file, - for stdout");
    analyze_cmd->add_flag("--restricted", restricted_only,
                          "print only the restricted form of each expression");

    std::vector<std::string> vexprs;
    std::string vfile;
    uint64_t vseed = 1;
    size_t vcount = 0;
    i64 vmaxden = 12, vmaxmag = 4;
    bool vdeep = false;
    auto* verify_cmd = app.add_subcommand("verify",
        "Re-derive every identity (twist identities, symmetries, restricted form)");
    verify_cmd->add_option("expressions", vexprs, "expressions to verify");
    verify_cmd->add_option("--file", vfile, "file with one expression per line");
    verify_cmd->add_option("--count", vcount, "also verify this many random knots");
    verify_cmd->add_option("--seed", vseed, "seed for the random knots")->capture_default_str();
    verify_cmd->add_option("--max-denominator", vmaxden, "Qi bound for random knots")
        ->capture_default_str();
    verify_cmd->add_option("--max-magnitude", vmaxmag, "|Pi/Qi| bound for random knots")
        ->capture_default_str();
    verify_cmd->add_flag("--deep", vdeep, "also sweep every type II/III candidate system");

    std::string eexpr;
    bool no_minimality = false;
    std::string eformat = "plain";
    auto* enum_cmd = app.add_subcommand("enumerate",
        "List the candidate edgepath systems of one expression");
    enum_cmd->add_option("expression", eexpr, "knot expression")->required();
    enum_cmd->add_flag("--no-minimality", no_minimality,
                       "keep paths that cut corners of D-triangles");
    enum_cmd->add_option("--format", eformat, "json or plain")->capture_default_str();

    std::string sexpr, sout;
    auto* svg_cmd = app.add_subcommand("svg", "Draw the three edgepath systems");
    svg_cmd->add_option("expression", sexpr, "knot expression")->required();
    svg_cmd->add_option("--out", sout, "output file, - for stdout");

    uint64_t rseed = 1;
    size_t rcount = 10;
    i64 rmaxden = 12, rmaxmag = 4;
    auto* random_cmd = app.add_subcommand("random", "Print random knot expressions");
    random_cmd->add_option("--count", rcount, "number of expressions")->capture_default_str();
    random_cmd->add_option("--seed", rseed, "generator seed")->capture_default_str();
    random_cmd->add_option("--max-denominator", rmaxden, "Qi bound")->capture_default_str();
    random_cmd->add_option("--max-magnitude", rmaxmag, "|Pi/Qi| bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) {
            auto es = gather(exprs, file);
            if (es.empty())
                throw std::runtime_error("no expressions given (positional or --file)");
            if (restricted_only) {
                std::ostringstream s;
                for (const auto& e : es)
                    s << to_restricted_expression(e).expression.str() << "\n";
                write_out(out_path, s.str());
                return 0;
            }
            std::vector<AnalysisReport> rs;
            for (const auto& e : es) {
                log_line("analyze " + e.str());
                rs.push_back(analyze(e));
            }
            write_out(out_path, render_reports(rs, parse_format(format)));
            return 0;
        }
        if (*verify_cmd) {
            auto es = gather(vexprs, vfile);
            SplitMix64 rng(vseed);
            RandomParams rp;
            rp.max_denominator = vmaxden;
            rp.max_magnitude = vmaxmag;
            for (size_t i = 0; i < vcount; ++i) es.push_back(random_expression(rng, rp));
            if (es.empty())
                throw std::runtime_error("nothing to verify: pass expressions or --count");
            VerifyResult vr = verify_expressions(es, vdeep);
            std::cout << "checked " << vr.checked << " expressions, " << vr.failures
                      << " failures\n";
            for (const auto& m : vr.messages) std::cout << "  " << m << "\n";
            return vr.failures == 0 ? 0 : 1;
        }
        if (*enum_cmd) {
            MontesinosExpression e = parse_expression(eexpr);
            auto cs = assemble_candidate_systems(e, !no_minimality);
            auto sw = sweep_candidate_bounds(e, !no_minimality);
            auto r = slope_bounds(e);
            if (parse_format(eformat) == ReportFormat::Json) {
                std::ostringstream s;
                s << "{\n  \"expression\": \"" << e.str() << "\",\n  \"type_iii\": "
                  << cs.count_iii() << ",\n  \"type_ii\": " << cs.count_ii()
                  << ",\n  \"candidates\": " << sw.candidates << ",\n  \"violations\": "
                  << sw.violations << ",\n  \"slope_range\": [" << sw.min_slope << ", "
                  << sw.max_slope << "],\n  \"bounds\": [" << r.slope_lower << ", "
                  << r.slope_upper << "]\n}\n";
                std::cout << s.str();
            } else {
                std::cout << "expression   M(" << e.str() << ")\n";
                for (size_t t = 0; t < cs.per_tangle_iii.size(); ++t) {
                    std::cout << "tangle " << e.tangles[t].str() << "\n";
                    for (const auto& p : cs.per_tangle_iii[t])
                        std::cout << "  III  twist=" << p.twist() << "  " << p.str() << "\n";
                    for (const auto& p : cs.per_tangle_ii[t])
                        std::cout << "  II   twist=" << p.twist() << "  " << p.str() << "\n";
                }
                std::cout << "systems      type III " << cs.count_iii() << ", type II "
                          << cs.count_ii() << "\n";
                std::cout << "slope range  [" << sw.min_slope << ", " << sw.max_slope
                          << "] inside bounds [" << r.slope_lower << ", " << r.slope_upper
                          << "]\n";
                std::cout << "violations   " << sw.violations << "\n";
            }
            return sw.violations == 0 ? 0 : 1;
        }
        if (*svg_cmd) {
            AnalysisReport r = analyze(parse_expression(sexpr));
            write_out(sout, render_svg(r));
            return 0;
        }
        if (*random_cmd) {
            SplitMix64 rng(rseed);
            RandomParams rp;
            rp.max_denominator = rmaxden;
            rp.max_magnitude = rmaxmag;
            for (size_t i = 0; i < rcount; ++i)
                std::cout << random_expression(rng, rp).str() << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
