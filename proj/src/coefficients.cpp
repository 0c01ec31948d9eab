#include "trirec/coefficients.hpp"

#include <json.hpp>

namespace trirec {

namespace {

using nlohmann::json;

Rational rational_field(const json& node, const char* what) {
    if (!node.is_string()) {
        throw ParseError(std::string("expected a rational string for ") + what, 0);
    }
    return Rational::parse(node.get<std::string>());
}

std::vector<Rational> rational_list(const json& node, const char* what) {
    if (!node.is_array() || node.empty()) {
        throw ParseError(std::string("expected a non-empty array of rational strings for ") + what, 0);
    }
    std::vector<Rational> out;
    out.reserve(node.size());
    for (const auto& item : node) out.push_back(rational_field(item, what));
    return out;
}

std::pair<std::int64_t, std::int64_t> domain_or_default(const json& doc) {
    if (!doc.contains("domain")) return {kDefaultDomainLo, kDefaultDomainHi};
    const auto& dom = doc.at("domain");
    if (!dom.is_array() || dom.size() != 2 || !dom[0].is_number_integer() || !dom[1].is_number_integer()) {
        throw ParseError("domain must be an integer pair [lo, hi]", 0);
    }
    return {dom[0].get<std::int64_t>(), dom[1].get<std::int64_t>()};
}

}  // namespace

CoefficientSequence parse_coefficient_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
        throw ParseError("coefficient spec must be an object with a \"type\" string", 0);
    }
    const std::string type = doc.at("type").get<std::string>();

    if (type == "table") {
        if (doc.contains("domain")) {
            throw ParseError("table domain is implied by values/start_index", 0);
        }
        if (!doc.contains("values")) {
            throw ParseError("table spec requires \"values\"", 0);
        }
        std::int64_t start = 1;
        if (doc.contains("start_index")) {
            if (!doc.at("start_index").is_number_integer()) {
                throw ParseError("start_index must be an integer", 0);
            }
            start = doc.at("start_index").get<std::int64_t>();
        }
        return CoefficientSequence::table(rational_list(doc.at("values"), "values"), start);
    }
    if (type == "constant") {
        if (!doc.contains("value")) {
            throw ParseError("constant spec requires \"value\"", 0);
        }
        const auto [lo, hi] = domain_or_default(doc);
        return CoefficientSequence::constant(rational_field(doc.at("value"), "value"), lo, hi);
    }
    if (type == "rational_function") {
        if (!doc.contains("num") || !doc.contains("den")) {
            throw ParseError("rational_function spec requires \"num\" and \"den\"", 0);
        }
        const auto [lo, hi] = domain_or_default(doc);
        return CoefficientSequence::rational_function(rational_list(doc.at("num"), "num"),
                                                      rational_list(doc.at("den"), "den"), lo, hi);
    }
    throw ParseError("unknown coefficient spec type \"" + type + "\"", 0);
}

}  // namespace trirec
