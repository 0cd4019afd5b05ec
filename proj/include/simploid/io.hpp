#pragma once

#include "simploid/expansion.hpp"
#include "simploid/nerve.hpp"

#include "json.hpp"

namespace simploid::io {

using Json = nlohmann::json;

Json sset_to_json(const FiniteSimplicialSet& t);
SSet sset_from_json(const Json& j);

Json smap_to_json(const SimplicialMap& f);
SimplicialMap smap_from_json(const Json& j);

Json cert_to_json(const ExpansionCertificate& c);
ExpansionCertificate cert_from_json(const Json& j);

Json sobj_to_json(const TruncatedSimplicialObject& x);
SObj sobj_from_json(const Json& j);

// morphism of truncated simplicial objects, levels up to depth
Json morphism_to_json(const Morphism& f, int depth);
Morphism morphism_from_json(const Json& j);

Json element_to_json(const Element& e);
Element element_from_json(const DGAlgebra& A, const Json& j);

Json dga_to_json(const DGAlgebra& A);
DGAlgebra dga_from_json(const Json& j);

Json nerve_to_json(const NervePoint& p);
NervePoint nerve_from_json(const DGAlgebra& A, const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
// canonical text: sorted keys, two-space indent, trailing newline
std::string dump(const Json& j);

}  // namespace simploid::io
