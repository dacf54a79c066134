#pragma once

#include "conjcore/algebra.hpp"
#include "conjcore/report.hpp"

namespace conjtk {

/// Degree behavior of a graded map: degree-preserving, or halving (the
/// halving case requires an evenly graded source).
enum class DegreeScale { full, half };

/// Algebra homomorphism between graded algebras, given by one homogeneous
/// target polynomial per source generator. Whether it is well defined on the
/// relations is not assumed; run check_map before trusting it.
class AlgebraMap {
public:
    AlgebraMap(GradedAlgebra source, GradedAlgebra target, DegreeScale scale,
               std::vector<Polynomial> images);

    static AlgebraMap identity(const GradedAlgebra& ring);

    const GradedAlgebra& source() const { return source_; }
    const GradedAlgebra& target() const { return target_; }
    DegreeScale scale() const { return scale_; }
    const std::vector<Polynomial>& images() const { return images_; }

    /// Image degree of a source degree; -1 when not representable (odd
    /// degree under a halving map).
    int scaled_degree(int d) const;

    /// Substitutes generator images and reduces in the target.
    Polynomial apply(const Polynomial& p) const;

private:
    GradedAlgebra source_;
    GradedAlgebra target_;
    DegreeScale scale_;
    std::vector<Polynomial> images_;
};

/// Well-definedness: generator image degrees match the scale and every
/// source relation maps to zero. Failing generators and relations are
/// reported individually.
Report check_map(const AlgebraMap& f);

struct IsoResult {
    bool iso = true;
    int first_fail_degree = -1;
    std::string detail;
};

/// Degreewise bijectivity up to the reachable cutoff: equal dimensions and
/// spanning images in every degree. Assumes check_map passed.
IsoResult is_iso_up_to(const AlgebraMap& f);

/// g after f; scales multiply (half-half is rejected).
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

} // namespace conjtk
