// parbelos: exact construction and verification of the parbelos, plus a
// checker for .geo construction scripts.
//
// Exit codes: 0 all checks pass, 1 some assertion or check failed,
// 2 usage, parse or evaluation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "parbelos/dsl.hpp"
#include "parbelos/error.hpp"
#include "parbelos/fuzz.hpp"
#include "parbelos/report_json.hpp"
#include "parbelos/scene.hpp"

namespace {

using namespace parbelos;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << contents;
}

Point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("expected X,Y but got '" + text + "'");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

std::string point_text(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

void print_report(std::ostream& out, const TheoremReport& report) {
    out << report.name << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
    for (const Check& c : report.checks) {
        out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL (" + c.detail + ")") << '\n';
    }
}

struct ScriptRun {
    dsl::Program program;
    dsl::EvalReport report;
};

// Parses and evaluates; reports parse errors and returns nullopt.
std::optional<ScriptRun> run_script(const std::string& path) {
    const std::string text = read_file(path);
    try {
        dsl::Program program = dsl::parse_script(text);
        dsl::EvalReport report = dsl::evaluate(program);
        return ScriptRun{std::move(program), std::move(report)};
    } catch (const dsl::ParseError& e) {
        std::cerr << path << ":" << e.pos().line << ":" << e.pos().column << ": "
                  << dsl::kind_name(e.kind()) << ": " << e.detail() << '\n';
        return std::nullopt;
    }
}

int cmd_check(const std::string& path, bool json) {
    const auto run = run_script(path);
    if (!run) return kError;
    const dsl::EvalReport& report = run->report;
    if (json) {
        std::cout << dsl::to_json(report).dump(2) << '\n';
    } else {
        for (const dsl::AssertionResult& a : report.assertions) {
            std::cout << path << ":" << a.pos.line << ": " << (a.pass ? "pass" : "FAIL") << " "
                      << a.pred_text << '\n';
        }
    }
    if (report.error) {
        std::cerr << path << ":" << report.error->pos.line << ":" << report.error->pos.column
                  << ": " << report.error->kind << ": " << report.error->message << '\n';
        return kError;
    }
    for (const dsl::AssertionResult& a : report.assertions) {
        if (!a.pass) {
            std::cerr << path << ": assertion failed at line " << a.pos.line << ": "
                      << a.pred_text << '\n';
        }
    }
    return report.overall ? kPass : kFail;
}

int cmd_parbelos(const std::string& c1, const std::string& c2, const std::string& c3,
                 const std::string& side, bool json, const std::string& svg_path) {
    const ParbelosFigure fig = build_parbelos(parse_point(c1), parse_point(c2), parse_point(c3),
                                              parse_side(side));
    const TheoremReport sondow = verify_sondow(fig);
    const TheoremReport corollaries = verify_corollaries(fig);

    if (json) {
        std::cout << parbelos_report(fig, sondow, corollaries).dump(2) << '\n';
    } else {
        const std::pair<const char*, const Point*> points[] = {
            {"C1", &fig.C1},        {"C2", &fig.C2}, {"C3", &fig.C3},
            {"T1", &fig.T1},        {"T2", &fig.T2}, {"T3", &fig.T3},
            {"O", &fig.center_O},   {"F", &fig.focus_F},
            {"contact", &fig.contact_T},
            {"H", &fig.H},          {"A1", &fig.A1}, {"A3", &fig.A3},
        };
        for (const auto& [name, p] : points) std::cout << name << " = " << point_text(*p) << '\n';
        std::cout << "radius_sq = " << fig.circumcircle_K.radius_sq().str() << '\n';
        print_report(std::cout, sondow);
        print_report(std::cout, corollaries);
    }
    if (!svg_path.empty()) {
        Scene scene;
        add_figure(scene, fig);
        write_file(svg_path, render_svg(scene));
    }
    return sondow.pass && corollaries.pass ? kPass : kFail;
}

int cmd_fuzz(std::uint64_t cases, std::uint64_t seed, long max_height, bool parallel) {
    if (max_height < 1) throw UsageError("--max-height must be at least 1");
    const fuzz::FuzzSummary summary = fuzz::run_fuzz({cases, seed, max_height, parallel});
    for (const std::string& m : summary.messages) std::cout << m << '\n';
    std::cout << "cases: " << summary.cases << ", checks: " << summary.checks
              << ", failed cases: " << summary.failed_cases << '\n';
    return summary.failed_cases == 0 ? kPass : kFail;
}

int cmd_render(const std::string& path, const std::string& svg_path, int digits) {
    const auto run = run_script(path);
    if (!run) return kError;
    if (run->report.error) {
        const dsl::EvalError& e = *run->report.error;
        std::cerr << path << ":" << e.pos.line << ":" << e.pos.column << ": " << e.kind << ": "
                  << e.message << '\n';
        return kError;
    }
    RenderOptions opts;
    opts.decimal_digits = digits;
    write_file(svg_path, render_svg(scene_from_report(run->report), opts));
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact parbelos construction and theorem checking"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Evaluate a .geo script and its assertions");
    std::string check_file;
    bool check_json = false;
    check->add_option("file", check_file, "Script path")->required();
    check->add_flag("--json", check_json, "Print the JSON report");

    auto* par = app.add_subcommand("parbelos", "Build a parbelos and verify its properties");
    std::string c1, c2, c3, side = "left", svg_out;
    bool par_json = false;
    par->add_option("--c1", c1, "Cusp C1 as X,Y")->required();
    par->add_option("--c2", c2, "Cusp C2 as X,Y")->required();
    par->add_option("--c3", c3, "Cusp C3 as X,Y")->required();
    par->add_option("--side", side, "Opening side relative to C1->C3 (left|right)");
    par->add_flag("--json", par_json, "Print the JSON report");
    par->add_option("--svg", svg_out, "Write the figure as SVG");

    auto* fz = app.add_subcommand("fuzz", "Randomized exact invariant suite");
    std::uint64_t cases = 100, seed = 1;
    long max_height = 100;
    bool parallel = false;
    fz->add_option("--cases", cases, "Number of cases");
    fz->add_option("--seed", seed, "Base seed");
    fz->add_option("--max-height", max_height, "Bound on numerators and denominators");
    fz->add_flag("--parallel", parallel, "Run cases on all cores");

    auto* render = app.add_subcommand("render", "Render a .geo script to SVG");
    std::string render_file, render_out;
    int digits = 12;
    render->add_option("file", render_file, "Script path")->required();
    render->add_option("--svg", render_out, "Output path")->required();
    render->add_option("--digits", digits, "Decimal digits in the output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kError;
    }

    try {
        if (*check) return cmd_check(check_file, check_json);
        if (*par) return cmd_parbelos(c1, c2, c3, side, par_json, svg_out);
        if (*fz) return cmd_fuzz(cases, seed, max_height, parallel);
        if (*render) return cmd_render(render_file, render_out, digits);
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
