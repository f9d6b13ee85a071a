#include "rslab/json_io.hpp"

namespace rslab {

namespace {

Rational rational_from_json(const Json& j, const char* field) {
    if (!j.is_string()) throw ParseError(std::string("field '") + field + "' must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

std::int64_t int_from_json(const Json& j, const char* field) {
    if (!j.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Json to_json(const GaussianRational& z) {
    return Json{{"re", z.re.str()}, {"im", z.im.str()}};
}

GaussianRational gaussian_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw ParseError("gaussian value must be an object with \"re\" and \"im\"");
    return {rational_from_json(j.at("re"), "re"), rational_from_json(j.at("im"), "im")};
}

Json to_json(const GammaProduct& f) {
    Json arr = Json::array();
    for (const auto& factor : f.factors())
        arr.push_back(Json{{"shift", to_json(factor.shift)}, {"exp", factor.exp}});
    return arr;
}

GammaProduct gamma_product_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("Gamma_R product must be a JSON array of factors");
    std::vector<GammaProduct::Factor> factors;
    for (const Json& item : j) {
        if (!item.is_object() || !item.contains("shift") || !item.contains("exp"))
            throw ParseError("factor must be an object with \"shift\" and \"exp\"");
        const std::int64_t exp = int_from_json(item.at("exp"), "exp");
        if (exp == 0) throw ParseError("factor exponent must be nonzero");
        factors.push_back({gaussian_from_json(item.at("shift")), exp});
    }
    GammaProduct p = GammaProduct::from_factors(std::move(factors));
    if (p.factors().size() != j.size()) throw ParseError("factor shifts must be distinct");
    return p;
}

Json to_json(const ExceptionalCertificate& cert) {
    return Json{{"s0", to_json(cert.s0)},
                {"level", cert.level},
                {"multi_index", cert.multi_index.entries},
                {"matching", cert.matching}};
}

ExceptionalCertificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("certificate must be a JSON object");
    ExceptionalCertificate cert;
    cert.s0 = gaussian_from_json(j.at("s0"));
    cert.level = int_from_json(j.at("level"), "level");
    for (const Json& e : j.at("multi_index")) cert.multi_index.entries.push_back(int_from_json(e, "multi_index"));
    for (const Json& e : j.at("matching"))
        cert.matching.push_back(static_cast<int>(int_from_json(e, "matching")));
    return cert;
}

Json to_json(const FactorizationReport& report) {
    Json grid = Json::array();
    for (const Contribution& c : report.contributions) {
        grid.push_back(Json{{"k", c.k},
                            {"i", c.subset1},
                            {"j", c.subset2},
                            {"lex_inverse", to_json(c.inverse_exceptional)},
                            {"skipped_by_strong_gp", c.skipped_by_strong_gp}});
    }
    return Json{{"equal", report.equal},
                {"lhs", to_json(report.lhs)},
                {"rhs", to_json(report.rhs)},
                {"contributions", std::move(grid)}};
}

}  // namespace rslab
