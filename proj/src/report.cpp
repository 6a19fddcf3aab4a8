#include "hallforge/report.hpp"

namespace hallforge {

std::string VerificationReport::param_string() const {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += ' ';
        out += name + '=' + std::to_string(value);
    }
    return out;
}

std::string VerificationReport::summary_line() const {
    std::string line = (passed ? "PASS " : "FAIL ") + identity;
    if (!params.empty()) line += ' ' + param_string();
    if (counterexample) line += " first-counterexample: " + *counterexample;
    return line;
}

Json to_json(const VerificationReport& r) {
    Json params = Json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    Json j;
    j["identity"] = r.identity;
    j["params"] = params;
    j["passed"] = r.passed;
    j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    j["details"] = r.details;
    return j;
}

Json to_json(const Partition& p) {
    Json j;
    j["parts"] = p.parts();
    j["size"] = p.size();
    j["length"] = p.length();
    j["alt_size"] = p.alt_size();
    return j;
}

}  // namespace hallforge
