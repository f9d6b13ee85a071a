// json_io.hpp — JSON serialization of the exchange types. Numbers travel as
// exact "p/q" strings; arrays are emitted in canonical order so serialization
// round-trips byte-for-byte.

#ifndef RSLAB_JSON_IO_HPP
#define RSLAB_JSON_IO_HPP

#include <json.hpp>

#include "rslab/derivatives.hpp"

namespace rslab {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

Json to_json(const GammaProduct& f);
GammaProduct gamma_product_from_json(const Json& j);

Json to_json(const ExceptionalCertificate& cert);
ExceptionalCertificate certificate_from_json(const Json& j);

Json to_json(const FactorizationReport& report);

}  // namespace rslab

#endif
