#pragma once

#include <json.hpp>

#include "zs/digraph.hpp"
#include "zs/gadget.hpp"
#include "zs/matroid.hpp"
#include "zs/reduced.hpp"

namespace zs {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const json& j);

json element_to_json(const GroupSpec& spec, elem_t e);
elem_t element_from_json(const GroupSpec& spec, const json& j);

// {"p":3,"k":2,"elements":[[1,0],[1,0],[0,2]]}
json multiset_to_json(const Multiset& s);
Multiset multiset_from_json(const json& j);

// {"p":2,"k":2,"n":4,"weights":[[null,[1,0],...],...]}
json weighting_to_json(const WeightedDigraph& g);
WeightedDigraph weighting_from_json(const json& j);

json cycle_cert_to_json(const GroupSpec& spec, const CycleCertificate& cert);
CycleCertificate cycle_cert_from_json(const json& j);

json refutation_to_json(const RefutationCertificate& cert);
RefutationCertificate refutation_from_json(const json& j);

json hbounds_to_json(const HBoundsReport& rep);
json packing_to_json(const BasePacking& packing);
json basis_union_report_to_json(const BasisUnionReport& rep);
json fverdict_to_json(const FVerdict& verdict, int p, int k, int n);
json levels_to_json(const WeightedDigraph& g, const GadgetFamilyLevels& fam);
json recursion_report_to_json(const RecursionStepReport& rep);

} // namespace zs
