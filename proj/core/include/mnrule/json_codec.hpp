#pragma once

#include "mnrule/partition.hpp"
#include "mnrule/permutation.hpp"
#include "mnrule/quantum.hpp"
#include "mnrule/schubert.hpp"
#include "mnrule/symfun.hpp"

#include <json.hpp>

namespace mnrule {

using Json = nlohmann::json;

// Coefficients are JSON integers; values beyond 64 bits are written as
// decimal strings and both forms are accepted on input.
Json coeff_to_json(const Integer& c);
Integer coeff_from_json(const Json& j);

Json to_json(const Partition& p);
Json to_json(const RimHookRecord& hook);
Json to_json(const CoreResult& core);
Json to_json(const Permutation& w);
Json to_json(const SchurExpansion& f);
Json to_json(const SchubertExpansion& f);
Json to_json(const QuantumClass& f);
Json to_json(const CheckReport& report);

// Decoders throw InvalidArgument on schema violations.
Partition partition_from_json(const Json& j);
RimHookRecord rim_hook_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
SchurExpansion schur_expansion_from_json(const Json& j);
SchubertExpansion schubert_expansion_from_json(const Json& j);
QuantumClass quantum_class_from_json(const Json& j, const GrContext& ctx);

}  // namespace mnrule
