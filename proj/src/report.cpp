#include "qgkit/report.hpp"

#include <sstream>

namespace qgkit {

Json report_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& item : rep.items) {
        Json j;
        j["name"] = item.name;
        j["status"] = to_string(item.status);
        if (!item.detail.empty())
            j["detail"] = item.detail;
        checks.push_back(std::move(j));
    }
    Json out;
    out["title"] = rep.title;
    out["checks"] = std::move(checks);
    if (!rep.payload.empty()) {
        Json p;
        for (const auto& [k, v] : rep.payload)
            p[k] = v;
        out["payload"] = std::move(p);
    }
    out["all_pass"] = rep.all_pass();
    return out;
}

std::string report_text(const Report& rep) {
    std::ostringstream out;
    out << rep.title << "\n";
    for (const auto& item : rep.items) {
        out << "  " << to_string(item.status) << "  " << item.name;
        if (!item.detail.empty())
            out << "  (" << item.detail << ")";
        out << "\n";
    }
    for (const auto& [k, v] : rep.payload)
        out << "  " << k << " = " << v << "\n";
    out << (rep.all_pass() ? "all checks passed" : "NOT all checks passed") << "\n";
    return out.str();
}

} // namespace qgkit
