//  Copyright 2026 The bierlab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "bierlab/config.hpp"

#include <cstdlib>
#include <string>

namespace bierlab {

std::size_t max_faces() {
  static const std::size_t value = [] {
    const char* env = std::getenv("BIERLAB_MAX_FACES");
    if (!env) return std::size_t{200000};
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
    return std::size_t{200000};
  }();
  return value;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::NotSemilattice: return "NotSemilattice";
    case ErrorCode::NotProperIdeal: return "NotProperIdeal";
    case ErrorCode::GroundTooSmall: return "GroundTooSmall";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::FaceNotPresent: return "FaceNotPresent";
    case ErrorCode::EmptyCenter: return "EmptyCenter";
    case ErrorCode::VertexClash: return "VertexClash";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AlphaIsBottom: return "AlphaIsBottom";
    case ErrorCode::AlphaNotMaximal: return "AlphaNotMaximal";
    case ErrorCode::NotCoatoms: return "NotCoatoms";
    case ErrorCode::InputNotCertified: return "InputNotCertified";
    case ErrorCode::CenterNotFace: return "CenterNotFace";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::IsomorphismFailed: return "IsomorphismFailed";
    case ErrorCode::PartialOrderViolated: return "PartialOrderViolated";
    case ErrorCode::StepFailed: return "StepFailed";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::Timeout: return "Timeout";
  }
  return "UnknownError";
}

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailed:
    case ErrorCode::IsomorphismFailed:
    case ErrorCode::PartialOrderViolated:
    case ErrorCode::StepFailed:
    case ErrorCode::NumericOverflow:
      return 3;
    case ErrorCode::Timeout:
      return 4;
    default:
      return 2;
  }
}

}  // namespace bierlab
