#pragma once

#include <string>

#include "santalo/bodies.hpp"
#include "santalo/functionals.hpp"
#include "santalo/geometry.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/ndim.hpp"

namespace santalo {

// ArcGon wire format:
//   {"kind":"arcgon","vertices":[[x,y],...],
//    "arcs":[null | {"center":[x,y],"radius":r} |
//            {"full_circle":true,"center":[x,y],"radius":r}, ...]}
// Named bodies: {"kind":"named","name":"slab_of_ball","params":{"w":1.0,"R":1.0}}
std::string body_to_json(const BodySpec& spec);
BodySpec body_from_json(const std::string& text);  // throws std::runtime_error on parse failure

std::string functional_vector_to_json(const FunctionalVector& fv);
FunctionalVector functional_vector_from_json(const std::string& text);

std::string slack_reports_to_json(const std::vector<SlackReport>& reports);

std::string brd_report_to_json(const BrDReport& rep);
std::string brw_report_to_json(const BRwReport& rep);
std::string vrw_report_to_json(const VRwReport& rep);

}  // namespace santalo
