// Batch frontend: evaluate bodies, check the inequality catalog, certify
// sharpness, generate diagrams, search empirical envelopes, and run the
// n-dimensional certifications.
//
// Exit codes: 0 success, 1 mathematical violation found, 2 input error,
// 3 invalid geometry, 4 certification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "santalo/bodies.hpp"
#include "santalo/diagrams.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/json_io.hpp"
#include "santalo/ndim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitCertification = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

santalo::FunctionalVector load_and_evaluate(const std::string& body_path) {
    santalo::BodySpec spec = santalo::body_from_json(read_file(body_path));
    if (spec.is_raw()) {
        santalo::ValidationReport rep = santalo::validate_arcgon(*spec.raw);
        if (!rep.ok) {
            std::ostringstream os;
            os << "invalid geometry:";
            for (const std::string& v : rep.violations) os << "\n  - " << v;
            throw std::invalid_argument(os.str());
        }
    }
    return santalo::evaluate_all(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-geometry workbench: planar functionals, inequality catalog, diagrams"};
    app.require_subcommand(1);

    std::string body_path, json_out, fv_path, ineq_id, diagram_name, csv_out, svg_out, direction = "up",
                                                                                       theorem;
    int grid = 33, iters = 10000, samples_n = 1000, dim = 3;
    long mc_samples = 1000000;
    uint64_t seed = 1;
    double x_target = 0.0;
    bool constant_width = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate the six functionals of a body");
    eval->add_option("--body", body_path, "BodySpec JSON file")->required();
    eval->add_option("--json", json_out, "write the FunctionalVector JSON here");

    CLI::App* check = app.add_subcommand("check", "run the full inequality catalog on a body");
    check->add_option("--body", body_path, "BodySpec JSON file");
    check->add_option("--fv", fv_path, "replay a FunctionalVector JSON instead of a body");
    check->add_flag("--constant-width", constant_width, "force the constant-width records applicable");
    check->add_option("--json", json_out, "write the slack report JSON here");

    CLI::App* sharp = app.add_subcommand("sharpness", "replay an equality family over a parameter grid");
    sharp->add_option("--ineq", ineq_id, "inequality id")->required();
    sharp->add_option("--grid", grid, "grid points per family");

    CLI::App* diag = app.add_subcommand("diagram", "sample a diagram cloud and render curves");
    diag->add_option("--name", diagram_name, "one of ApD, pDr, pRw, ARw, Arw, prw")->required();
    diag->add_option("--samples", samples_n, "number of sampled bodies");
    diag->add_option("--seed", seed, "seed");
    diag->add_option("--csv", csv_out, "CSV output path");
    diag->add_option("--svg", svg_out, "SVG output path");

    CLI::App* search = app.add_subcommand("search", "push the empirical envelope at a fixed abscissa");
    search->add_option("--name", diagram_name, "diagram name")->required();
    search->add_option("--x", x_target, "target abscissa")->required();
    search->add_option("--dir", direction, "up or down")->check(CLI::IsMember({"up", "down"}));
    search->add_option("--iters", iters, "annealing iterations");
    search->add_option("--seed", seed, "seed");

    CLI::App* ndim = app.add_subcommand("ndim", "n-dimensional certifications");
    ndim->add_option("--theorem", theorem, "brD, bRw or VRw")->required()->check(CLI::IsMember({"brD", "bRw", "VRw"}));
    ndim->add_option("--dim", dim, "ambient dimension");
    ndim->add_option("--grid", grid, "parameter grid points");
    ndim->add_option("--samples", mc_samples, "Monte Carlo samples per grid point");
    ndim->add_option("--seed", seed, "seed");
    ndim->add_option("--json", json_out, "write the certification report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (eval->parsed()) {
            santalo::FunctionalVector fv = load_and_evaluate(body_path);
            std::string out = santalo::functional_vector_to_json(fv);
            std::cout << out << "\n";
            if (!json_out.empty()) write_file(json_out, out);
            return kExitOk;
        }

        if (check->parsed()) {
            santalo::FunctionalVector fv;
            if (!fv_path.empty())
                fv = santalo::functional_vector_from_json(read_file(fv_path));
            else if (!body_path.empty())
                fv = load_and_evaluate(body_path);
            else
                throw std::runtime_error("check: --body or --fv required");
            santalo::CatalogFlags flags;
            flags.constant_width = constant_width;
            std::vector<santalo::SlackReport> reports = santalo::check_all(fv, flags);
            std::string out = santalo::slack_reports_to_json(reports);
            std::cout << out << "\n";
            if (!json_out.empty()) write_file(json_out, out);
            bool violated = false;
            for (const auto& r : reports) {
                if (r.violation) {
                    violated = true;
                    std::cout << "VIOLATION: " << r.id << " slack=" << r.slack << "\n";
                }
                if (r.applicable && r.equality_within <= 1e-9)
                    std::cout << "equality: " << r.id << "\n";
            }
            return violated ? kExitViolation : kExitOk;
        }

        if (sharp->parsed()) {
            santalo::SharpnessResult res = santalo::certify_sharpness(ineq_id, grid);
            if (!res.has_claim) {
                std::cout << res.id << ": no sharpness claim\n";
                return kExitOk;
            }
            std::printf("%s: %s  max_gap=%.3e at param=%.6f  family=%s\n", res.id.c_str(),
                        res.pass ? "PASS" : "FAIL", res.max_gap, res.argmax_param, res.family.c_str());
            return res.pass ? kExitOk : kExitCertification;
        }

        if (diag->parsed()) {
            santalo::DiagramSpec spec = santalo::diagram_spec(santalo::diagram_from_string(diagram_name));
            santalo::PointCloud cloud = santalo::sample_cloud(spec, {}, samples_n, seed);
            std::vector<santalo::Curve> curves = santalo::known_curves(spec);
            if (!csv_out.empty()) write_file(csv_out, santalo::export_csv(cloud));
            if (!svg_out.empty()) write_file(svg_out, santalo::render_svg(spec, cloud, curves));
            std::cout << "diagram " << diagram_name << ": " << cloud.rows.size() << " samples, "
                      << curves.size() << " curves";
            if (spec.name == santalo::DiagramName::pDr)
                std::cout << " (x = r/D, y = p/D per the figure-caption convention)";
            std::cout << "\n";
            return kExitOk;
        }

        if (search->parsed()) {
            santalo::DiagramSpec spec = santalo::diagram_spec(santalo::diagram_from_string(diagram_name));
            santalo::PushResult res =
                santalo::boundary_push(spec, direction == "up", x_target, iters, seed);
            std::printf("empirical envelope (not a proven boundary): x=%.9f y=%.9f\n", res.x, res.y);
            return kExitOk;
        }

        if (ndim->parsed()) {
            std::vector<double> g;
            for (int i = 0; i < grid; ++i)
                g.push_back(grid == 1 ? 1.0 : 2.0 * i / (grid - 1));
            std::string out;
            bool pass = true;
            if (theorem == "VRw") {
                santalo::VRwReport rep = santalo::certify_VRw(dim, g);
                out = santalo::vrw_report_to_json(rep);
                pass = rep.pass;
            } else if (theorem == "bRw") {
                santalo::BRwReport rep = santalo::certify_bRw(dim, g, mc_samples, seed);
                out = santalo::brw_report_to_json(rep);
                pass = rep.all_pass && rep.perturbed_ok;
            } else {
                std::vector<double> rg;
                for (int i = 0; i < grid; ++i)
                    rg.push_back(grid == 1 ? 1.0 : static_cast<double>(i) / (grid - 1));
                santalo::BrDReport rep = santalo::certify_brD(dim, rg, mc_samples, seed);
                out = santalo::brd_report_to_json(rep);
                pass = rep.consistent_passes_ball && !rep.printed_passes_ball;
            }
            std::cout << out << "\n";
            if (!json_out.empty()) write_file(json_out, out);
            return pass ? kExitOk : kExitCertification;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        if (what.find("invalid geometry") != std::string::npos || what.find("invalid arc-gon") != std::string::npos)
            return kExitGeometry;
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        if (what.find("JSON") != std::string::npos || what.find("cannot open") != std::string::npos ||
            what.find("malformed") != std::string::npos)
            return kExitInput;
        return kExitCertification;
    }
    return kExitInput;
}
