// Copyright 2026 The sqenergy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqenergy/error.hpp"

namespace sqenergy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonpositiveT: return "NonpositiveT";
    case ErrorCode::OddK: return "OddK";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
  }
  return "Unknown";
}

}  // namespace sqenergy
