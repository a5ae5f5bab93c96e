#pragma once

// JSON and text forms of the library's values. Field elements are integers
// (bit i = coefficient of x^i), polynomials are ascending integer arrays, and
// factor indices are 1-based on the outside.

#include <string>
#include <string_view>

#include "json.hpp"

#include "constaclass/code_builder.hpp"
#include "constaclass/decompose.hpp"
#include "constaclass/ideal_enum.hpp"

namespace constaclass {

using Json = nlohmann::ordered_json;

Json to_json(const FieldCtx& ctx);
Json to_json(const Poly& p);
Poly poly_from_json(const FieldCtx& ctx, const Json& j);

Json to_json(const Decomposition& dec);
Json to_json(const BridgeTable& table, const Decomposition& dec);

/// {"factor": j, "family": ..., "params": {...}, ["k": k,] "log2_size": s}
Json to_json(const IdealDescriptor& desc, const Decomposition& dec);
IdealDescriptor descriptor_from_json(const Json& j, const Decomposition& dec);

/// "II-2:b=1+x", "III:k=4", "I:c1=1,c2=x"; factor is zero-based.
IdealDescriptor parse_descriptor(std::string_view text, std::size_t factor, const Decomposition& dec);
std::string to_string(const IdealDescriptor& desc);

Json to_json(const CodeWord& w);
Json to_json(const ConstaCode& code, const Decomposition& dec);

/// u-layered text: "u^2(1+x^2) + u^3(x^4)", "0" for the zero word.
std::string to_text(const CodeWord& w, const CodeRing& ring);

}  // namespace constaclass
