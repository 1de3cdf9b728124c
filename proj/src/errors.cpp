/*
Copyright 2026 The weyl-strata Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "weylstrata/errors.hpp"

namespace weylstrata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFiniteType: return "NotFiniteType";
    case ErrorCode::kRankCapExceeded: return "RankCapExceeded";
    case ErrorCode::kInvalidCartan: return "InvalidCartan";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kAutMismatch: return "AutMismatch";
    case ErrorCode::kRepNotMinimal: return "RepNotMinimal";
    case ErrorCode::kNotDistinguished: return "NotDistinguished";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kIndexMismatch: return "IndexMismatch";
    case ErrorCode::kNoNormalization: return "NoNormalization";
    case ErrorCode::kKNotDeltaStable: return "KNotDeltaStable";
    case ErrorCode::kPreconditionFailure: return "PreconditionFailure";
    case ErrorCode::kNotAPoset: return "NotAPoset";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConsistencyError: return "ConsistencyError";
    case ErrorCode::kBijectionFailure: return "BijectionFailure";
  }
  return "Unknown";
}

}  // namespace weylstrata
