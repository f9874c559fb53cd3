#pragma once

#include <json.hpp>

#include "postalg/cohomology.hpp"
#include "postalg/post_structures.hpp"

namespace postalg {

using json = nlohmann::json;

// Matrix: {"rows":r,"cols":c,"field":"Q"|"Fp:<p>","entries":["num/den",...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Subspaces serialize their canonical basis matrix.
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

// Algebra: {"dim":n,"field":...,"kind":"assoc"|"lie"|"general",
//           "sc":[[i,j,k,"num/den"],...],"labels":[...]}
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// RBOperator: {"weight":"num/den","matrix":{...}}
json rb_to_json(const RBOperator& r);
RBOperator rb_from_json(const json& j, const FieldSpec& field);

json post_lie_to_json(const PostLieStructure& p);
PostLieStructure post_lie_from_json(const json& j);

json post_assoc_to_json(const PostAssocStructure& p);
PostAssocStructure post_assoc_from_json(const json& j);

json representation_to_json(const Representation& r);
Representation representation_from_json(const json& j);

json bimodule_to_json(const Bimodule& b);
Bimodule bimodule_from_json(const json& j);

json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json report_to_json(const Report& r);
json fingerprint_to_json(const Fingerprint& f);

}  // namespace postalg
