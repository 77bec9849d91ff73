#pragma once

// Deterministic JSON round trips for the core types.  Keys are emitted in
// sorted order and coefficients use the canonical scalar grammar, so equal
// values serialize to identical text.
//
//   SymFunc   {"basis":"s","maxdeg":2,"terms":[{"coeff":"q","shape":[1,1]}]}
//   DyckPath  {"start":0,"steps":"NNEE"}
//   VElem     {"level":1,"terms":[{"sym":{...},"y":[1]}]}
//   shapes    plain arrays: [2,1]

#include <string>

#include "shuffle/dyck.hpp"
#include "shuffle/symfunc.hpp"
#include "shuffle/velem.hpp"

namespace shuffle {

std::string to_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);

std::string to_json(const DyckPath& pi);
DyckPath path_from_json(const std::string& text);

std::string to_json(const VElem& v);
VElem velem_from_json(const std::string& text);

std::string to_json(const Partition& lam);
Partition partition_from_json(const std::string& text);

std::string to_json(const Composition& alpha);
Composition composition_from_json(const std::string& text);

// Comma-separated shape forms used by the command line ("2,1"; "" = empty).
Composition parse_composition(const std::string& text);
Partition parse_partition(const std::string& text);

}  // namespace shuffle
