#include "forestlab/io_json.hpp"

#include <bit>

namespace forestlab {

nlohmann::json stat_record_json(const StatRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["inv"] = r.inv;
    j["maj"] = r.maj;
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["inv_B"] = r.inv_b;
    j["maj_B"] = r.maj_b;
    j["fmaj"] = r.fmaj;
    j["rmaj"] = r.rmaj;
    j["p"] = r.p_pos;
    j["Des"] = r.des;
    j["Des_B"] = r.des_b;
    j["Btmax_B"] = r.btmax_b;
    j["Cbtmax_B"] = r.cbtmax_b;
    if (r.inv_d) j["inv_D"] = *r.inv_d;
    if (r.btmax_d) j["Btmax_D"] = *r.btmax_d;
    if (r.btmax_a) j["Btmax"] = *r.btmax_a;
    if (r.cbtmax_a) j["Cbtmax"] = *r.cbtmax_a;
    return j;
}

nlohmann::json code_json(const CodeSeq& code) {
    nlohmann::json j;
    j["entries"] = code.entries;
    j["bound"] = code.bound == CodeBound::A ? "A" : "B";
    return j;
}

nlohmann::json sort_trace_json(const std::vector<SortStep>& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const SortStep& s : trace) {
        steps.push_back({{"i", s.magnitude},
                         {"v", s.vertex},
                         {"u", s.pivot},
                         {"contribution", s.contribution},
                         {"labels_after", s.labels_after}});
    }
    return steps;
}

nlohmann::json report_json(const Report& report) {
    nlohmann::json j;
    j["identity"] = report.identity;
    j["forest"] = report.forest;
    j["status"] = std::string(report_status_name(report.status));
    if (!report.witness.empty()) j["witness"] = report.witness;
    j["seconds"] = report.seconds;
    return j;
}

nlohmann::json poly_json(const MultiPoly& poly) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, coeff] : poly.terms()) {
        std::vector<int> t;
        std::uint64_t mask = m.t_mask;
        while (mask) {
            t.push_back(std::countr_zero(mask) + 1);
            mask &= mask - 1;
        }
        terms.push_back({{"coeff", coeff}, {"q", m.q}, {"p", m.p}, {"t", t}});
    }
    nlohmann::json j;
    j["terms"] = terms;
    j["text"] = poly.to_string();
    return j;
}

}  // namespace forestlab
