#pragma once

#include "json.hpp"

#include "coxaut/automorphism.hpp"
#include "coxaut/free_products.hpp"
#include "coxaut/outgroup.hpp"
#include "coxaut/structure.hpp"

namespace coxaut {

using Json = nlohmann::ordered_json;

Json validation_json(const CoxeterDiagram& d, const ValidationReport& r);
Json structure_json(const StructureData& s);
Json out_report_json(const OutReport& r);
Json decomposition_json(const FreeDecomposition& dec);

Json labeling_json(const AutLabeling& a);
Json labeling_json(const AutLabeling& a, const DiagramAutomorphism& perm);

// Parses the `labeling_json` format (absent fields mean identity) and
// validates the result. The permutation, when present, is returned through
// `perm`.
AutLabeling parse_labeling(StructurePtr s, const Json& j, DiagramAutomorphism* perm);

// Words serialize as whitespace-separated generator names; "1" is the
// identity.
Json word_json(const CoxeterDiagram& d, const Word& w);

Json triple_json(const FreeDecomposition& dec, const TripleAut& t);
TripleAut parse_triple(const FreeDecomposition& dec, const Json& j);

}  // namespace coxaut
