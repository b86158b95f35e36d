#pragma once

#include <string>
#include <string_view>

#include "matpow/closed_form.hpp"

namespace matpow {

/// Closed-form document as JSON: fixed key order, numbers at 17 significant
/// digits, mandatory "schema_version": 1.
std::string serialize_closed_form(const ClosedForm& cf);

/// Inverse of serialize_closed_form; validates the schema version and shape.
/// Throws ParseError on malformed documents.
ClosedForm deserialize_closed_form(std::string_view json_text);

}  // namespace matpow
