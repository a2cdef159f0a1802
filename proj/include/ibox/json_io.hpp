#pragma once

#include <json.hpp>

#include "ibox/arrows.hpp"
#include "ibox/cartan.hpp"
#include "ibox/family.hpp"
#include "ibox/relations.hpp"
#include "ibox/sweep.hpp"

namespace ibox {

using Json = nlohmann::ordered_json;

Json to_json(const IBox& b);
IBox box_from_json(const Json& j);

// {"range":[a,b],"boxes":[[x,y],...],"efe":[...],"frozen":[...],"exchangeable":[...]}
Json to_json(const Family& f);
// Reads "range" and "boxes"; other keys are ignored. Throws ChainError if
// the boxes are not a maximal commuting family, std::invalid_argument on
// malformed input.
Family family_from_json(const SequencePtr& seq, const Json& j);

// {"boxes":[...],"exchangeable":[...],"entries":[[...]]}, rows = all boxes,
// columns = exchangeable boxes.
Json to_json(const ExchangeMatrix& m);

Json to_json(const Monomial& m);
Json to_json(const VerticalReport& r, const CartanMatrix& cartan);
Json to_json(const ConsistencyReport& r);
Json to_json(const SweepSummary& s);

// {"index":["1","2",...],"c":[[...]],"d":[...]} with "d" optional.
CartanMatrix cartan_from_json(const Json& j);

}  // namespace ibox
