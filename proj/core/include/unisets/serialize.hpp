#pragma once

#include <nlohmann/json.hpp>

#include "unisets/basis.hpp"
#include "unisets/powers.hpp"
#include "unisets/universal.hpp"

// JSON forms of the library's results. Subsets are sorted index arrays and
// carry no group of their own; the enclosing object records the group spec.
// Every decode_* throws ParseError on malformed input.
namespace unisets {

using json = nlohmann::json;

json encode(const GroupSpec& spec);
GroupSpec decode_group_spec(const json& j);

json encode(const Subset& s);
Subset decode_subset(const Group& g, const json& j);

json encode(const Verdict& v);
Verdict decode_verdict(const json& j);

json encode(const UniversalSetResult& r);
UniversalSetResult decode_universal(const json& j);

json encode(const UniversalTuple& t);
UniversalTuple decode_tuple(const json& j);

json encode(const CoveringResult& c);
json encode(const BasisResult& b);
BasisResult decode_basis(const json& j);

json encode(const BigInt& x);
BigInt decode_bigint(const json& j);

json encode(const BasisGraph& g);
BasisGraph decode_graph(const json& j);

}  // namespace unisets
