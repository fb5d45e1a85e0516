#pragma once

#include "json.hpp"
#include "pfh/fixed_point.hpp"

namespace pfh {

using Json = nlohmann::ordered_json;

Json toJson(const Partition& p);
Json toJson(const FlagPoint& p);
Json toJson(const AIndex& x);
/// Monomials as [[dq, dt, mult], ...] in descending term order.
Json toJson(const Character& c);
/// {"grade":[n,k],"basis":"H","terms":[{"flag":..., "coeff":"..."}]}, terms in flag order.
Json toJson(const KVector& v);
Json toJson(const OperatorMatrix& m);

Partition partitionFromJson(const Json& j);
FlagPoint flagFromJson(const Json& j);
KVector vectorFromJson(const Json& j);

}  // namespace pfh
