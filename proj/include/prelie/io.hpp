#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "prelie/anticyclic.hpp"
#include "prelie/lie.hpp"

namespace prelie {

// Text forms:
//   tree vector     3/2*(a b) - (b a)
//   wedge vector    a ^ (b c) - 2*b ^ (a c)
//   CycPreLie       a | (b (c d)) + (c b d)
//   Lie vector      [a,[b,c]] - 2*[[a,b],c]
// "0" is the zero vector. All parsers throw ParseError.

TreeVector parse_tree_vector(std::string_view text);
WedgeVector parse_wedge_vector(std::string_view text);
/// "i0 | body"; the basepoint may be any label and the result is normalized.
CycPreLieElem parse_cycprelie(std::string_view text);
LieVector parse_lie_vector(std::string_view text);

std::string format_tree_vector(const TreeVector& v);
std::string format_wedge_vector(const WedgeVector& v);
std::string format_cycprelie(const CycPreLieElem& x);
std::string format_lie_vector(const LieVector& v);
std::string format_perm_cyc(const PermCycElem& p);

nlohmann::json to_json(const TreeVector& v);    // [{tree, coeff}]
nlohmann::json to_json(const WedgeVector& v);   // [{left, right, coeff}]
nlohmann::json to_json(const CycPreLieElem& x); // {labels, basepoint, body}
nlohmann::json to_json(const LieVector& v);     // [{word, coeff}]
nlohmann::json to_json(const PermCycElem& p);   // [{slot, elem}]

TreeVector tree_vector_from_json(const nlohmann::json& j);
WedgeVector wedge_vector_from_json(const nlohmann::json& j);

}  // namespace prelie
