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

#ifndef BIERLAB_ERROR_HPP_
#define BIERLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace bierlab {

// Machine-readable failure codes. Grouped by how the CLI maps them to exit
// codes: input validation -> 2, mathematical verification -> 3, timeout -> 4.
enum class ErrorCode {
  // input validation
  CycleDetected,
  UnknownElement,
  SizeTooLarge,
  EmptyPoset,
  NotComparable,
  NotBounded,
  NotLattice,
  NotSemilattice,
  NotProperIdeal,
  GroundTooSmall,
  NotProper,
  FaceNotPresent,
  EmptyCenter,
  VertexClash,
  EmptyComplex,
  TooLarge,
  AlphaIsBottom,
  AlphaNotMaximal,
  NotCoatoms,
  InputNotCertified,
  CenterNotFace,
  ParseError,
  IoError,
  // mathematical verification
  VerificationFailed,
  IsomorphismFailed,
  PartialOrderViolated,
  StepFailed,
  NumericOverflow,
  // resource limits
  Timeout,
};

const char* error_code_name(ErrorCode code);

// 2 = validation, 3 = verification, 4 = timeout.
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = "") {
  throw Error(code, detail);
}

}  // namespace bierlab

#endif  // BIERLAB_ERROR_HPP_
