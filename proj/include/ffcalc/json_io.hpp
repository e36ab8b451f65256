#pragma once

#include <string>

#include <json.hpp>

#include "ffcalc/banach_colmez.hpp"
#include "ffcalc/bundle.hpp"
#include "ffcalc/moduli.hpp"
#include "ffcalc/weyl.hpp"

namespace ffcalc::json_io {

using json = nlohmann::ordered_json;

/// Structurally malformed input (wrong JSON type, missing field).
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string location, const std::string& message)
        : std::runtime_error(message), location_(std::move(location)) {}
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// Decoders take the location of `j` for error reporting. Values that are
// well-typed but violate a mathematical precondition raise PreconditionError.
std::int64_t get_int(const json& j, const std::string& where);
const json& get_field(const json& j, const char* key, const std::string& where);
std::vector<std::int64_t> int_vector(const json& j, const std::string& where);
weyl::IntMatrix int_matrix(const json& j, const std::string& where);

Bundle bundle_from_json(const json& j, const std::string& where);
json to_json(const Bundle& e);

bc::TorsionSheaf torsion_from_json(const json& j, const std::string& where);
json to_json(const bc::TorsionSheaf& q);

bc::TwoTermComplex complex_from_json(const json& j, const std::string& where);
json to_json(const bc::TwoTermComplex& c);

json to_json(const bc::SmoothDim& s);
bc::SmoothDim smooth_dim_from_json(const json& j, const std::string& where);

json to_json(const HNPolygon& p);

moduli::BifiltrationData bifiltration_from_json(const json& j, const std::string& where);
json to_json(const moduli::BifiltrationData& b);

weyl::WeylElement weyl_from_json(const json& j, const std::string& where);
json to_json(const weyl::WeylElement& w);

}  // namespace ffcalc::json_io
