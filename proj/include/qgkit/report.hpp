#ifndef QGKIT_REPORT_HPP
#define QGKIT_REPORT_HPP

#include "qgkit/freealg.hpp"

#include <json.hpp>

namespace qgkit {

using Json = nlohmann::ordered_json;

Json report_json(const Report& rep);
std::string report_text(const Report& rep);

} // namespace qgkit

#endif
