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

#ifndef BIERLAB_IO_HPP_
#define BIERLAB_IO_HPP_

#include <string>

#include <json.hpp>

#include "bierlab/bier.hpp"
#include "bierlab/complex.hpp"
#include "bierlab/homology.hpp"
#include "bierlab/nested.hpp"
#include "bierlab/poset.hpp"
#include "bierlab/shelling.hpp"

namespace bierlab {

using Json = nlohmann::ordered_json;

// Poset files: {"elements":[...], "covers":[[lo,hi],...]}. Elements are
// strings; Bier posets may carry structured labels {"lo":..,"hi":..} or
// "TOP", which parse back to their canonical serializations.
Json poset_to_json(const Poset& p);
Json bier_poset_to_json(const BierPoset& b);
Poset poset_from_json(const Json& j);

Json ideal_to_json(const Poset& p, const Bitset& members);
std::vector<std::string> ideal_members_from_json(const Json& j);

Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

Json homology_to_json(const HomologyProfile& h);

Json chain_to_json(const ChainRecord& rec, bool emit_steps);

Json ordering_to_json(const FacetOrdering& o, const std::string& criterion);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// FNV-1a of the canonical dump, for the reproducibility stamp in reports.
std::string config_hash(const Json& job);

}  // namespace bierlab

#endif  // BIERLAB_IO_HPP_
