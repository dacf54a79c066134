#pragma once

#include "conjcore/cells.hpp"
#include "conjcore/constructors.hpp"
#include "conjcore/frame.hpp"
#include "conjcore/hamiltonian.hpp"

#include <nlohmann/json.hpp>

namespace conjtk {

using Json = nlohmann::ordered_json;

Json to_json(const Series& s);

Json to_json(const GradedAlgebra& ring);
GradedAlgebra algebra_from_json(const Json& j, int default_cutoff);

Json to_json(const ConjugationFrame& frame);
ConjugationFrame frame_from_json(const Json& j, int default_cutoff);

Json to_json(const Report& report);

Json to_json(const CellSpec& spec);
CellSpec cellspec_from_json(const Json& j);

Json to_json(const ToricPolytope& p);
ToricPolytope polytope_from_json(const Json& j);

/// Minimal presentation: eliminates generators the reduced basis rewrites in
/// terms of the others, renames even generators to g1..gs and fixed
/// generators to h1..ht positionally, and presents both rings by their
/// reduced bases. Frames built from different presentations of the same data
/// canonicalize to identical serializations.
ConjugationFrame canonical_frame(const ConjugationFrame& frame);
Json canonical_json(const ConjugationFrame& frame);

} // namespace conjtk
