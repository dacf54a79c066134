#pragma once

#include "conjcore/frame.hpp"

namespace conjtk {

/// Conjugate-equivariant complex bundle over a frame: rank plus mod-2 Chern
/// classes c_1..c_rank in the even ring. Stiefel-Whitney classes of the fixed
/// real bundle are not independent data: w_i = kappa(c_i).
class TauBundle {
public:
    TauBundle(ConjugationFrame base, int rank, std::vector<Polynomial> chern);

    const ConjugationFrame& base() const { return base_; }
    int rank() const { return rank_; }

    /// c_i with c_0 = 1 and zero beyond the rank.
    Polynomial chern_class(int i) const;
    Polynomial total_chern() const;
    Polynomial euler() const { return chern_class(rank_); }

    /// w_i = kappa(c_i).
    Polynomial sw_class(int i) const;
    Polynomial total_sw() const;

private:
    ConjugationFrame base_;
    int rank_;
    std::vector<Polynomial> chern_; // index i -> c_(i+1)
};

/// Sum bundle: ranks add, total Chern classes multiply.
TauBundle whitney_sum(const TauBundle& a, const TauBundle& b);

/// kappa sends the Euler class to the Euler class of the fixed bundle.
bool euler_check(const TauBundle& b);

/// Total-class identity kappa(c) = w, checked componentwise and as total
/// classes.
Report chern_sw_check(const TauBundle& b);

/// Thom module of the bundle: restriction factor omega = sum_j w_j u^(rank-j).
FrameModule thom_frame(const TauBundle& b);

/// The Thom space as a standalone frame: unit plus one generator per even
/// basis element of the base (degree shifted by 2*rank), products twisted by
/// the Euler class. Throws when the cutoff cannot hold the shifted data.
ConjugationFrame thom_space_frame(const TauBundle& b);

/// Projectivization: adjoins the hyperplane class t (degree 2) with
/// t^r = sum_i c_i t^(r-i), and s (degree 1) with the halved relation on the
/// fixed side; the new class restricts by the line-bundle rule s*u + s^2.
ConjugationFrame projective_bundle_frame(const TauBundle& b);

} // namespace conjtk
