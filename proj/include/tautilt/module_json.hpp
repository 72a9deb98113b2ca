#pragma once

// Module literals: {"dims": [..], "arrows": {"a": [[..], ..]}} with entries
// given as integers or "p/q" strings.

#include <string>
#include <string_view>

#include "tautilt/algebra.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

/// Parses and validates a module literal. Throws ParseError or InputError.
Representation parse_module(const BoundQuiver& q, std::string_view json_text);
std::string format_module(const BoundQuiver& q, const Representation& m);

}  // namespace tautilt
