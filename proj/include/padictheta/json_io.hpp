#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "padictheta/family.hpp"
#include "padictheta/pullback.hpp"
#include "padictheta/series.hpp"
#include "padictheta/symmetrizer.hpp"
#include "padictheta/theta.hpp"
#include "padictheta/weight.hpp"

namespace padictheta {

using Json = nlohmann::ordered_json;

// Integers that fit in a long become JSON numbers, others decimal strings.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const PAdicInt& a);
Json to_json(const Signature& sig);
Json to_json(const Weight& kappa);
Json to_json(const PartitionedSignature& part);
// [place, i, j], or [block, place, i, j] when with_block is set.
Json to_json(const VarLabel& l, bool with_block = false);
Json to_json(const SymmetrizedFunctional& f);
Json to_json(const std::map<LabelTuple, Integer>& form);
Json to_json(const ShiftedSeries& s, bool partitioned = false);
Json to_json(const PhiEquivalenceReport& r);
Json to_json(const CongruenceReport& r);
Json to_json(const HermitianExponent& h);
Json to_json(const QExpansion& q);
Json to_json(const KummerReport& r);

Signature signature_from_json(const Json& j);
Weight weight_from_json(const Signature& sig, const Json& j);
ShiftedSeries series_from_json(const Json& j, const RingCtxPtr& ctx, const VarsPtr& vars);

std::vector<long> parse_int_list(const std::string& text);
// "2,2;1,3" is two places with (a+, a-) = (2,2) and (1,3).
Signature parse_signature(const std::string& text);
// Entries per place separated by ';'.
Weight parse_weight(const Signature& sig, const std::string& text);
// Parts separated by '/', each written like a signature.
PartitionedSignature parse_partition(const Signature& sig, const std::string& text);

}  // namespace padictheta
