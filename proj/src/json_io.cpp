#include "ffcalc/json_io.hpp"

#include <limits>

#include "ffcalc/errors.hpp"

namespace ffcalc::json_io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& array_at(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where, "expected an array");
    return j;
}

}  // namespace

std::int64_t get_int(const json& j, const std::string& where) {
    if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<std::int64_t>();
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            throw SchemaError(where, "integer out of 64-bit range");
        }
        return static_cast<std::int64_t>(u);
    }
    throw SchemaError(where, "expected an integer");
}

const json& get_field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(at(where, key), std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::int64_t> int_vector(const json& j, const std::string& where) {
    std::vector<std::int64_t> out;
    const auto& arr = array_at(j, where);
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_int(arr[i], at(where, i)));
    return out;
}

weyl::IntMatrix int_matrix(const json& j, const std::string& where) {
    weyl::IntMatrix out;
    const auto& arr = array_at(j, where);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(int_vector(arr[i], at(where, i)));
    return out;
}

Bundle bundle_from_json(const json& j, const std::string& where) {
    const std::string loc = at(where, "summands");
    const auto& arr = array_at(get_field(j, "summands", where), loc);
    std::vector<Summand> parts;
    parts.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string item = at(loc, i);
        const auto& slope = array_at(get_field(arr[i], "slope", item), at(item, "slope"));
        if (slope.size() != 2) throw SchemaError(at(item, "slope"), "slope must be [numerator, denominator]");
        const auto s = get_int(slope[0], at(item, "slope") + "[0]");
        const auto r = get_int(slope[1], at(item, "slope") + "[1]");
        if (r < 1) throw PreconditionError(at(item, "slope") + "[1]", "slope denominator must be >= 1");
        const auto mult = get_int(get_field(arr[i], "mult", item), at(item, "mult"));
        if (mult < 1) throw PreconditionError(at(item, "mult"), "multiplicity must be >= 1");
        parts.push_back({Slope(s, r), mult});
    }
    return Bundle(std::move(parts));
}

json to_json(const Bundle& e) {
    json arr = json::array();
    for (const auto& s : e.summands()) {
        arr.push_back({{"slope", {s.slope.num(), s.slope.den()}}, {"mult", s.mult}});
    }
    return {{"summands", arr}};
}

bc::TorsionSheaf torsion_from_json(const json& j, const std::string& where) {
    const std::string loc = at(where, "stalks");
    const auto& arr = array_at(get_field(j, "stalks", where), loc);
    std::map<std::string, std::vector<std::int64_t>> stalks;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string item = at(loc, i);
        const auto& point = get_field(arr[i], "point", item);
        if (!point.is_string()) throw SchemaError(at(item, "point"), "point label must be a string");
        const auto lengths = int_vector(get_field(arr[i], "lengths", item), at(item, "lengths"));
        for (std::size_t k = 0; k < lengths.size(); ++k) {
            if (lengths[k] < 1) throw PreconditionError(at(at(item, "lengths"), k), "torsion lengths must be >= 1");
        }
        auto& slot = stalks[point.get<std::string>()];
        slot.insert(slot.end(), lengths.begin(), lengths.end());
    }
    return bc::TorsionSheaf(std::move(stalks));
}

json to_json(const bc::TorsionSheaf& q) {
    json arr = json::array();
    for (const auto& [point, lengths] : q.stalks()) arr.push_back({{"point", point}, {"lengths", lengths}});
    return {{"stalks", arr}};
}

bc::TwoTermComplex complex_from_json(const json& j, const std::string& where) {
    return {bundle_from_json(get_field(j, "e_minus1", where), at(where, "e_minus1")),
            bundle_from_json(get_field(j, "e_zero", where), at(where, "e_zero"))};
}

json to_json(const bc::TwoTermComplex& c) { return {{"e_minus1", to_json(c.e_minus1)}, {"e_zero", to_json(c.e_zero)}}; }

json to_json(const bc::SmoothDim& s) {
    return {{"smooth", s.is_smooth()}, {"dim", s.is_smooth() ? json(s.dim()) : json(nullptr)}};
}

bc::SmoothDim smooth_dim_from_json(const json& j, const std::string& where) {
    const auto& smooth = get_field(j, "smooth", where);
    if (!smooth.is_boolean()) throw SchemaError(at(where, "smooth"), "expected a boolean");
    const auto& dim = get_field(j, "dim", where);
    if (!smooth.get<bool>()) {
        if (!dim.is_null()) throw SchemaError(at(where, "dim"), "non-smooth spaces carry a null dimension");
        return bc::SmoothDim::not_smooth();
    }
    return bc::SmoothDim::smooth(get_int(dim, at(where, "dim")));
}

json to_json(const HNPolygon& p) {
    json arr = json::array();
    for (const auto& v : p.vertices()) arr.push_back({v.x, v.y});
    return arr;
}

moduli::BifiltrationData bifiltration_from_json(const json& j, const std::string& where) {
    moduli::BifiltrationData b;
    b.h = int_matrix(get_field(j, "h", where), at(where, "h"));
    b.d = int_matrix(get_field(j, "d", where), at(where, "d"));
    b.row_ranks = int_vector(get_field(j, "row_ranks", where), at(where, "row_ranks"));
    b.col_ranks = int_vector(get_field(j, "col_ranks", where), at(where, "col_ranks"));
    b.row_degs = int_vector(get_field(j, "row_degs", where), at(where, "row_degs"));
    b.col_degs = int_vector(get_field(j, "col_degs", where), at(where, "col_degs"));
    return b;
}

json to_json(const moduli::BifiltrationData& b) {
    return {{"h", b.h},
            {"d", b.d},
            {"row_ranks", b.row_ranks},
            {"col_ranks", b.col_ranks},
            {"row_degs", b.row_degs},
            {"col_degs", b.col_degs}};
}

weyl::WeylElement weyl_from_json(const json& j, const std::string& where) {
    const auto& arr = array_at(j, where);
    if (arr.size() > 1'000'000) throw PreconditionError(where, "permutation longer than 1000000");
    std::vector<int> one_line;
    one_line.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto v = get_int(arr[i], at(where, i));
        if (v < 1 || v > static_cast<std::int64_t>(arr.size())) {
            throw PreconditionError(at(where, i), "not a permutation of 1.." + std::to_string(arr.size()));
        }
        one_line.push_back(static_cast<int>(v));
    }
    try {
        return weyl::WeylElement(std::move(one_line));
    } catch (const PreconditionError& e) {
        throw PreconditionError(where, e.what());
    }
}

json to_json(const weyl::WeylElement& w) { return json(std::vector<int>(w.one_line().begin(), w.one_line().end())); }

}  // namespace ffcalc::json_io
