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

#ifndef BIERLAB_CONFIG_HPP_
#define BIERLAB_CONFIG_HPP_

#include <cstddef>
#include <cstdint>

#include "bierlab/error.hpp"

namespace bierlab {

inline constexpr const char* kVersion = "0.1.0";

// Hard cap on poset sizes; everything here is desk scale by contract.
inline constexpr int kMaxPosetElements = 4096;

// BIERLAB_MAX_FACES caps the instance size accepted by homology and
// shelling; overridable through the environment.
std::size_t max_faces();

// Deterministic stand-in for a wall-clock timeout: searches count the
// nodes they expand and fail with Timeout when the budget is exhausted.
// Keeping this in work units instead of seconds keeps reports
// byte-reproducible across machines.
struct SearchBudget {
  std::uint64_t nodes_left = 50'000'000;

  void consume(std::uint64_t n = 1) {
    if (nodes_left < n) fail(ErrorCode::Timeout, "search budget exhausted");
    nodes_left -= n;
  }
};

}  // namespace bierlab

#endif  // BIERLAB_CONFIG_HPP_
