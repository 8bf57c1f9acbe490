#include "octlin/json_io.hpp"

namespace octlin {

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json octonion_to_json(const Octonion& a) {
    Json arr = Json::array();
    for (int k = 0; k < 8; ++k) arr.push_back(a.coord(k).to_string());
    return arr;
}

Json flat_to_json(const AffineFlat& f) {
    Json j;
    j["dim"] = f.dim();
    if (f.is_empty()) return j;
    j["point"] = octonion_to_json(f.point());
    Json basis = Json::array();
    for (const auto& b : f.basis()) basis.push_back(octonion_to_json(b));
    j["basis"] = basis;
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["case"] = c.predicted_case;
    Json w = Json::object();
    for (const auto& [k, v] : c.witnesses) w[k] = v;
    j["witnesses"] = w;
    j["computed_dim"] = c.computed_dim;
    j["consistent"] = c.consistent;
    return j;
}

Json enumeration_to_json(const EnumerationResult& r) {
    Json j;
    j["field"] = "Fp:" + std::to_string(r.p);
    j["equation"] = r.equation;
    j["solution_count"] = r.solution_count;
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        Json coords = Json::array();
        for (int v : s) coords.push_back(std::to_string(v));
        samples.push_back(coords);
    }
    j["sample_solutions"] = samples;
    if (r.matches_flat) j["matches_flat"] = *r.matches_flat;
    return j;
}

Json trial_to_json(const VerifyReport& report, const TrialRecord& r) {
    Json j;
    j["case"] = std::string(report.theorem == Theorem::AXB ? "AXB:" : "ABX:") + report.case_id;
    j["trial"] = r.trial;
    j["ok"] = r.ok;
    if (!r.ok) j["witness"] = r.witness;
    return j;
}

Json degeneration_report_to_json(const DegenerationReport& r) {
    Json j;
    j["dim_original"] = r.dim_original;
    j["dim_degenerate"] = r.dim_degenerate;
    Json cons = Json::array();
    for (const auto& c : r.conclusions) {
        Json jc;
        jc["name"] = c.name;
        jc["applicable"] = c.applicable;
        jc["holds"] = c.holds;
        jc["detail"] = c.detail;
        cons.push_back(jc);
    }
    j["conclusions"] = cons;
    j["all_hold"] = r.all_hold;
    return j;
}

} // namespace octlin
