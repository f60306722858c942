#include "santalo/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace santalo {

using nlohmann::json;

namespace {

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [x, y] point");
    return {j[0].get<double>(), j[1].get<double>()};
}

json arcgon_to_json(const ArcGon& g) {
    json j;
    j["kind"] = "arcgon";
    json verts = json::array();
    for (const Point2& v : g.vertices) verts.push_back(point_to_json(v));
    j["vertices"] = verts;
    json arcs = json::array();
    for (const auto& a : g.arcs) {
        if (!a) {
            arcs.push_back(nullptr);
        } else {
            json ja;
            if (a->full_circle) ja["full_circle"] = true;
            ja["center"] = point_to_json(a->center);
            ja["radius"] = a->radius;
            arcs.push_back(ja);
        }
    }
    j["arcs"] = arcs;
    return j;
}

ArcGon arcgon_from_json(const json& j) {
    ArcGon g;
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw std::runtime_error("arcgon: missing vertices");
    for (const json& v : j["vertices"]) g.vertices.push_back(point_from_json(v));
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) throw std::runtime_error("arcgon: arcs must be an array");
        for (const json& a : j["arcs"]) {
            if (a.is_null()) {
                g.arcs.push_back(std::nullopt);
            } else {
                Arc arc;
                arc.center = point_from_json(a.at("center"));
                arc.radius = a.at("radius").get<double>();
                arc.full_circle = a.value("full_circle", false);
                g.arcs.push_back(arc);
            }
        }
    }
    if (g.arcs.empty()) g.arcs.assign(g.vertices.size(), std::nullopt);
    if (g.arcs.size() != g.vertices.size()) throw std::runtime_error("arcgon: one arc slot per edge required");
    return g;
}

}  // namespace

std::string body_to_json(const BodySpec& spec) {
    json j;
    if (spec.is_raw()) {
        j = arcgon_to_json(*spec.raw);
    } else {
        j["kind"] = "named";
        j["name"] = spec.name;
        j["params"] = json::object();
        for (const auto& [k, v] : spec.params) j["params"][k] = v;
    }
    return j.dump(2);
}

BodySpec body_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("JSON parse failure: ") + e.what());
    }
    try {
        std::string kind = j.value("kind", "arcgon");
        if (kind == "named") {
            std::map<std::string, double> params;
            if (j.contains("params"))
                for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
                    params[it.key()] = it.value().get<double>();
            return BodySpec::named(j.at("name").get<std::string>(), params);
        }
        if (kind == "arcgon") return BodySpec::of(arcgon_from_json(j));
        throw std::runtime_error("unknown body kind: " + kind);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed body JSON: ") + e.what());
    }
}

std::string functional_vector_to_json(const FunctionalVector& fv) {
    json j;
    j["A"] = fv.A;
    j["p"] = fv.p;
    j["r"] = fv.r;
    j["R"] = fv.R;
    j["D"] = fv.D;
    j["w"] = fv.w;
    j["incenter"] = point_to_json(fv.incenter);
    j["circumcenter"] = point_to_json(fv.circumcenter);
    j["diameter_pair"] = json::array({point_to_json(fv.diameter_pair.first), point_to_json(fv.diameter_pair.second)});
    j["width_direction"] = json::array({fv.width_direction.ux, fv.width_direction.uy});
    j["degenerate"] = fv.degenerate;
    j["err"] = {{"A", fv.err.A}, {"p", fv.err.p}, {"r", fv.err.r},
                {"R", fv.err.R}, {"D", fv.err.D}, {"w", fv.err.w}};
    return j.dump(2);
}

FunctionalVector functional_vector_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("JSON parse failure: ") + e.what());
    }
    FunctionalVector fv;
    try {
        fv.A = j.at("A").get<double>();
        fv.p = j.at("p").get<double>();
        fv.r = j.at("r").get<double>();
        fv.R = j.at("R").get<double>();
        fv.D = j.at("D").get<double>();
        fv.w = j.at("w").get<double>();
        if (j.contains("incenter")) fv.incenter = point_from_json(j["incenter"]);
        if (j.contains("circumcenter")) fv.circumcenter = point_from_json(j["circumcenter"]);
        if (j.contains("width_direction"))
            fv.width_direction = UnitVector2::of(j["width_direction"][0].get<double>(),
                                                 j["width_direction"][1].get<double>());
        fv.degenerate = j.value("degenerate", false);
        if (j.contains("err")) {
            fv.err.A = j["err"].value("A", 0.0);
            fv.err.p = j["err"].value("p", 0.0);
            fv.err.r = j["err"].value("r", 0.0);
            fv.err.R = j["err"].value("R", 0.0);
            fv.err.D = j["err"].value("D", 0.0);
            fv.err.w = j["err"].value("w", 0.0);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed functional vector JSON: ") + e.what());
    }
    return fv;
}

std::string slack_reports_to_json(const std::vector<SlackReport>& reports) {
    json arr = json::array();
    for (const SlackReport& r : reports) {
        arr.push_back({{"id", r.id},
                       {"applicable", r.applicable},
                       {"slack", r.slack},
                       {"equality_within", r.equality_within},
                       {"err_bound", r.err_bound},
                       {"violation", r.violation}});
    }
    return arr.dump(2);
}

std::string brd_report_to_json(const BrDReport& rep) {
    json rows = json::array();
    for (const BrDRow& r : rep.rows)
        rows.push_back({{"param", r.r},
                        {"mc_value", r.mc},
                        {"mc_stderr", r.mc_stderr},
                        {"rhs_printed", r.rhs_printed},
                        {"rhs_consistent", r.rhs_consistent},
                        {"verdict", r.verdict}});
    json j = {{"theorem", "brD"},
              {"dim", rep.dim},
              {"rows", rows},
              {"printed_passes_ball", rep.printed_passes_ball},
              {"consistent_passes_ball", rep.consistent_passes_ball},
              {"note", rep.note}};
    return j.dump(2);
}

std::string brw_report_to_json(const BRwReport& rep) {
    json rows = json::array();
    for (const BRwRow& r : rep.rows)
        rows.push_back({{"param", r.w},
                        {"mc_uniform", r.mc_true},
                        {"mc_uniform_stderr", r.stderr_true},
                        {"mc_planar", r.mc_planar},
                        {"mc_planar_stderr", r.stderr_planar},
                        {"rhs", r.rhs},
                        {"gap_uniform", r.gap_true},
                        {"verdict", r.pass_planar ? "PASS" : "FAIL"}});
    json j = {{"theorem", "bRw"},
              {"dim", rep.dim},
              {"rows", rows},
              {"all_pass", rep.all_pass},
              {"perturbed_ok", rep.perturbed_ok},
              {"perturbed_note", rep.perturbed_note},
              {"interpretation_note", rep.interpretation_note}};
    return j.dump(2);
}

std::string vrw_report_to_json(const VRwReport& rep) {
    json rows = json::array();
    for (const VRwRow& r : rep.rows) {
        json row = {{"param", r.w},
                    {"lhs_quadrature", r.lhs_quadrature},
                    {"rhs_hypergeometric", r.rhs_hypergeometric},
                    {"gap", r.gap}};
        if (r.has_closed) row["closed_form"] = r.closed_form;
        rows.push_back(row);
    }
    json j = {{"theorem", "VRw"}, {"dim", rep.dim}, {"rows", rows}, {"max_gap", rep.max_gap},
              {"verdict", rep.pass ? "PASS" : "FAIL"}};
    return j.dump(2);
}

}  // namespace santalo
