// Command-line front end: JSON in, classification / duals / theorem
// verification / compass construction / family sweeps / SVG figures out.
//
// Exit codes: 0 success, 1 usage, 2 parse or validation failure,
// 3 degenerate input, 4 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualquad/compass.hpp"
#include "dualquad/document.hpp"
#include "dualquad/duality.hpp"
#include "dualquad/family.hpp"
#include "dualquad/sampling.hpp"
#include "dualquad/svg.hpp"
#include "dualquad/theorems.hpp"

namespace dq = dualquad;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerification = 4;

std::string read_input(const std::string& in_path) {
    if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) throw dq::ParseError("cannot open input file: " + in_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw dq::ParseError("cannot open output file: " + out_path);
    f << text;
}

json report_json(const dq::TheoremReport& r) {
    return json{{"name", r.name},
                {"residuals", r.residuals},
                {"max_residual", r.max_residual()},
                {"tolerance", r.tolerance},
                {"passed", r.passed}};
}

void print_report_table(const std::vector<dq::TheoremReport>& reports) {
    for (const auto& r : reports) {
        std::printf("%-28s max residual %.3e  (tolerance %.1e)  %s\n", r.name.c_str(),
                    r.max_residual(), r.tolerance, r.passed ? "PASS" : "FAIL");
    }
}

struct CommonOpts {
    std::string in_path;
    std::string out_path;
    double tol = 1e-8;
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_out = false) {
    cmd->add_option("--in", opts.in_path, "input file (default: stdin)");
    cmd->add_option("--tol", opts.tol, "verification tolerance")->default_val(1e-8);
    cmd->add_flag("--json", opts.as_json, "machine-readable output");
    if (with_out) cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
}

dq::MarkedQuadrangle load_quadrangle(const CommonOpts& opts) {
    return dq::to_quadrangle(dq::parse_document(read_input(opts.in_path)));
}

int cmd_classify(const CommonOpts& opts) {
    dq::ShapeClass cls = dq::classify(load_quadrangle(opts));
    if (opts.as_json)
        std::cout << json{{"class", dq::to_string(cls)}}.dump() << "\n";
    else
        std::cout << dq::to_string(cls) << "\n";
    return kExitOk;
}

int cmd_dual(const CommonOpts& opts) {
    dq::MarkedQuadrangle q = load_quadrangle(opts);
    dq::MarkedQuadrangle d = dq::dual_quadrangle(q);
    auto s = dq::edge_lengths(d);
    auto diag = dq::diagonal_lengths(d);
    std::string doc = dq::print_document(dq::to_document(d, "dual"));

    if (opts.as_json) {
        json j{{"document", json::parse(doc)},
               {"edge_lengths", s},
               {"diagonals", diag}};
        write_output(opts.out_path, j.dump() + "\n");
        return kExitOk;
    }
    write_output(opts.out_path, doc + "\n");
    std::cerr << "edge lengths: " << s[0] << " " << s[1] << " " << s[2] << " " << s[3]
              << "\ndiagonals:    " << diag[0] << " " << diag[1] << "\n";
    return kExitOk;
}

// Aggregated property sweep over random quadrangles of every class.
std::vector<dq::TheoremReport> sampled_reports(int samples, uint64_t seed, dq::Tolerance tol) {
    dq::Rng rng(seed);
    std::vector<dq::TheoremReport> out;
    for (dq::ShapeClass cls : {dq::ShapeClass::Convex, dq::ShapeClass::NonConvexSimple,
                               dq::ShapeClass::SelfIntersecting}) {
        dq::TheoremReport sums, diags, classes, invol;
        for (int i = 0; i < samples; ++i) {
            dq::MarkedQuadrangle q = dq::random_quadrangle(cls, rng);
            sums.residuals.push_back(dq::verify_edge_sums(q, tol).max_residual());
            diags.residuals.push_back(dq::verify_diagonals(q, tol).max_residual());
            classes.residuals.push_back(dq::verify_class_preservation(q, tol).max_residual());
            invol.residuals.push_back(dq::verify_involution(q, tol).max_residual());
        }
        std::string suffix = std::string("[") + dq::to_string(cls) + "]";
        auto finish = [&](dq::TheoremReport& r, std::string name, double threshold) {
            r.name = name + suffix;
            r.tolerance = threshold;
            r.passed = r.max_residual() <= threshold;
            out.push_back(std::move(r));
        };
        finish(sums, "edge_sums", tol.eps);
        finish(diags, "diagonals", tol.eps);
        finish(classes, "class_preservation", tol.eps);
        finish(invol, "involution", tol.eps * 2.0);
    }
    return out;
}

int cmd_verify(const CommonOpts& opts, int samples, uint64_t seed, bool have_input) {
    std::vector<dq::TheoremReport> reports;
    if (have_input) {
        dq::MarkedQuadrangle q = load_quadrangle(opts);
        reports = dq::verify_all(q, dq::Tolerance(opts.tol));
    }
    if (samples > 0) {
        auto sampled = sampled_reports(samples, seed, dq::Tolerance(opts.tol));
        reports.insert(reports.end(), sampled.begin(), sampled.end());
    }

    if (opts.as_json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(report_json(r));
        std::cout << j.dump() << "\n";
    } else {
        print_report_table(reports);
    }
    for (const auto& r : reports)
        if (!r.passed) return kExitVerification;
    return kExitOk;
}

int cmd_compass(const CommonOpts& opts) {
    dq::MarkedQuadrangle q = load_quadrangle(opts);
    dq::CompassSteps steps = dq::compass_construction(q);
    dq::MarkedQuadrangle algebraic = dq::dual_quadrangle(q);
    dq::CongruenceReport rep =
        dq::congruent(steps.result, algebraic, dq::Tolerance(opts.tol), true);

    if (opts.as_json) {
        json j{{"result", json::parse(dq::print_document(dq::to_document(steps.result)))},
               {"b1", {steps.b1.x, steps.b1.y}},
               {"d1", {steps.d1.x, steps.d1.y}},
               {"radii",
                {{"b1_from_a", steps.radius_b1_a},
                 {"b1_from_c", steps.radius_b1_c},
                 {"d1_from_a", steps.radius_d1_a},
                 {"d1_from_c", steps.radius_d1_c}}},
               {"deviation_from_dual", rep.max_vertex_distance},
               {"congruent", rep.congruent}};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("radii at A: %.12g (B1), %.12g (D1)\n", steps.radius_b1_a,
                    steps.radius_d1_a);
        std::printf("radii at C: %.12g (B1), %.12g (D1)\n", steps.radius_b1_c,
                    steps.radius_d1_c);
        std::printf("B1 = (%.12g, %.12g)\n", steps.b1.x, steps.b1.y);
        std::printf("D1 = (%.12g, %.12g)\n", steps.d1.x, steps.d1.y);
        std::cout << dq::print_document(dq::to_document(steps.result, "compass-dual")) << "\n";
        std::printf("deviation from algebraic dual: %.3e (%s)\n", rep.max_vertex_distance,
                    rep.congruent ? "congruent" : "NOT congruent");
    }
    return rep.congruent ? kExitOk : kExitVerification;
}

int cmd_sweep(const CommonOpts& opts, int step_count) {
    std::string text = read_input(opts.in_path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw dq::ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != 2)
        throw dq::ParseError("sweep expects a JSON array of two quadrangle documents");
    dq::MarkedQuadrangle start = dq::to_quadrangle(dq::parse_document(j[0].dump()));
    dq::MarkedQuadrangle end = dq::to_quadrangle(dq::parse_document(j[1].dump()));

    dq::SweepResult result = dq::sweep(dq::FamilySpec(start, end, step_count));

    auto class_name = [](const std::optional<dq::ShapeClass>& c) {
        return c ? dq::to_string(*c) : "degenerate";
    };
    if (opts.as_json) {
        json rows = json::array();
        for (const auto& rec : result.records) {
            json row{{"t", rec.t},
                     {"margin", rec.margin},
                     {"class", class_name(rec.shape)}};
            if (!std::isnan(rec.dual_margin)) {
                row["dual_margin"] = rec.dual_margin;
                row["dual_class"] = class_name(rec.dual_shape);
            }
            rows.push_back(row);
        }
        std::cout << rows.dump() << "\n";
    } else {
        std::printf("%-10s %-20s %-12s %-20s %-12s\n", "t", "class", "margin",
                    "dual class", "dual margin");
        for (const auto& rec : result.records) {
            std::printf("%-10.6f %-20s %-12.3e ", rec.t, class_name(rec.shape), rec.margin);
            if (std::isnan(rec.dual_margin))
                std::printf("%-20s %-12s\n", "-", "-");
            else
                std::printf("%-20s %-12.3e\n", class_name(rec.dual_shape), rec.dual_margin);
        }
    }
    return kExitOk;
}

int cmd_render(const CommonOpts& opts, const dq::RenderSpec& spec) {
    dq::MarkedQuadrangle q = load_quadrangle(opts);
    dq::MarkedQuadrangle nq = dq::normalize(q);
    dq::MarkedQuadrangle d = dq::dual_quadrangle(q);
    write_output(opts.out_path, dq::render_svg(nq, d, spec));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual quadrangles: orthocomplement duality, verification and figures"};
    app.require_subcommand(1);

    CommonOpts classify_opts, dual_opts, verify_opts, compass_opts, sweep_opts, render_opts;

    CLI::App* classify_cmd = app.add_subcommand("classify", "shape class of a quadrangle");
    add_common(classify_cmd, classify_opts);

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual quadrangle with edge lengths");
    add_common(dual_cmd, dual_opts, true);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the theorem verifiers on a document and/or samples");
    add_common(verify_cmd, verify_opts);
    int samples = 0;
    uint64_t seed = 20240811;
    verify_cmd->add_option("--samples", samples, "random quadrangles per class");
    verify_cmd->add_option("--seed", seed, "seed for the random sweeps");

    CLI::App* compass_cmd = app.add_subcommand("compass", "ruler-and-compass dual of a convex quadrangle");
    add_common(compass_cmd, compass_opts);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classify a linear family of quadrangles");
    add_common(sweep_cmd, sweep_opts);
    int steps = 64;
    sweep_cmd->add_option("--steps", steps, "sweep resolution")->default_val(64);

    CLI::App* render_cmd = app.add_subcommand("render", "SVG figure of a quadrangle and its dual");
    add_common(render_cmd, render_opts, true);
    dq::RenderSpec render_spec;
    render_cmd->add_option("--width", render_spec.width, "canvas width")->default_val(800);
    render_cmd->add_option("--height", render_spec.height, "canvas height")->default_val(420);
    bool no_labels = false;
    render_cmd->add_flag("--no-labels", no_labels, "omit vertex labels");
    render_cmd->add_flag("--diagonals", render_spec.show_diagonals, "draw diagonals");
    render_cmd->add_option("--stroke-scale", render_spec.stroke_scale, "stroke width multiplier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(classify_opts);
        if (dual_cmd->parsed()) return cmd_dual(dual_opts);
        if (verify_cmd->parsed()) {
            bool have_input = !verify_opts.in_path.empty() || samples == 0;
            return cmd_verify(verify_opts, samples, seed, have_input);
        }
        if (compass_cmd->parsed()) return cmd_compass(compass_opts);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts, steps);
        if (render_cmd->parsed()) {
            render_spec.show_labels = !no_labels;
            return cmd_render(render_opts, render_spec);
        }
    } catch (const dq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dq::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dq::NotConvex& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dq::InvalidClass& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dq::DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const dq::DegenerateDual& e) {
        std::cerr << "degenerate dual: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const dq::DegenerateAtT& e) {
        std::cerr << "degenerate interpolant: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const dq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
