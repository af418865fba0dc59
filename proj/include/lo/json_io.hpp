#pragma once

#include <json.hpp>

#include "lo/ball.hpp"
#include "lo/certificate.hpp"
#include "lo/cone_search.hpp"
#include "lo/families.hpp"
#include "lo/implication.hpp"
#include "lo/knot_group.hpp"
#include "lo/obstruction.hpp"
#include "lo/planner.hpp"

namespace lo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Presentation& pres);
Json to_json(const KnotGroup& kg);
Json to_json(const IdentityReport& rep);
Json to_json(const Hypothesis& h);
Json to_json(const PositivityCertificate& cert);
Json to_json(const CertificateReport& rep);
Json to_json(const CertificateSuite& suite);
Json to_json(const CaseTree& tree);
Json trace_json(const Ball& ball, const std::vector<TraceStep>& trace);
Json to_json(const Ball& ball, const std::vector<Hypothesis>& hyps, const SearchResult& res);
Json to_json(const ImplicationRow& row);
Json to_json(const ObstructionComponent& c);
Json to_json(const Evidence& ev);
Json to_json(const ObstructionReport& rep);
Json to_json(const PlannedObstruction& plan);

// Certificate back from {target, hypotheses, factors: [{word, justification}], ...}.
PositivityCertificate certificate_from_json(const Json& j, const Presentation& pres);

// Wraps a document with the top-level schema field.
Json with_schema(const std::string& kind, Json body);

}  // namespace lo
