#pragma once

#include "mnrule/quantum.hpp"
#include "mnrule/schubert.hpp"
#include "mnrule/symfun.hpp"

#include <string>
#include <string_view>

namespace mnrule {

// Human-readable forms. The leading term carries no sign when positive and
// an empty combination prints as "0".

/// "s[3] - s[1,1,1]"
std::string format(const SchurExpansion& f);
/// "S[35671248] - S[34672158]", every word padded to a common S_n
std::string format(const SchubertExpansion& f);
/// "σ[3,3,3,2] + q σ[3] - 2 q^2 σ[]"
std::string format(const QuantumClass& f);

/// Comma-separated parts; the empty string is the empty partition.
Partition parse_partition(std::string_view text);

}  // namespace mnrule
