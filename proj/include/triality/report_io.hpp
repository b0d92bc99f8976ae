// Text and JSON rendering of classification reports, plus the strict
// schema round-trip used by the CLI determinism contract.
#pragma once

#include <string>

#include "triality/classify.hpp"

namespace triality::report_io {

std::string report_text(const classify::Report& rep);
std::string report_json(const classify::Report& rep);

// Parses a report JSON document into the schema and re-emits it; the
// output must equal the input byte-for-byte for documents produced by
// report_json.
std::string json_roundtrip(const std::string& json_text);

}  // namespace triality::report_io
