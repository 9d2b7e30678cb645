#pragma once

#include <string>

#include "braidforge/conjugacy.hpp"
#include "braidforge/ttk.hpp"

namespace braidforge {

// Certificate JSON, stable key order, 2-space indent, trailing newline.
// emit/parse round-trip exactly: parse(emit(x)) == x.
std::string emit_json(const FiberednessCertificate& cert);
FiberednessCertificate parse_fiberedness_json(const std::string& text);

std::string emit_json(const ConjugacyCertificate& cert);
ConjugacyCertificate parse_conjugacy_json(const std::string& text);

}  // namespace braidforge
