#pragma once

#include "regulous/blowup.hpp"
#include "regulous/certificates.hpp"
#include "regulous/closure.hpp"
#include "regulous/consets.hpp"

#include "json.hpp"

namespace regulous {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Point2& p);
Json to_json(const Jet& j);
Json to_json(const Verdict& v);
Json to_json(const KmaxResult& r);
Json to_json(const ResolutionTree& t);
Json to_json(const Stratification2& s);
Json to_json(const ConstructibleSet& s);
Json to_json(const LojaCert& c);
Json to_json(const RadicalCert& c);
Json to_json(const NssCert& c);
Json to_json(const OrderResult& r);
Json to_json(const ClosureResult& r);

Rational rational_from_json(const Json& j);
Jet jet_from_json(const Json& j, const std::vector<std::string>& vars);
LojaCert loja_cert_from_json(const Json& j);
RadicalCert radical_cert_from_json(const Json& j);
NssCert nss_cert_from_json(const Json& j);
ArcSymIncidence incidence_from_json(const Json& j);

} // namespace regulous
