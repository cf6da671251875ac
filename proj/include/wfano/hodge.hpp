#pragma once

#include "wfano/core.hpp"
#include "wfano/series.hpp"

namespace wfano {

/// Generator data of the bigraded ring R = C[x_0..x_n, y_1..y_c] with
/// bideg x_i = (a_i, 0), bideg y_j = (-d_j, 1); the Jacobian relations of
/// F = sum y_j f_j have bidegrees (-a_i, 1) and (d_j, 0).
struct CayleyGenerators {
    WeightSystem space;
    Multidegree multidegree;

    int dim() const { return space.n() - multidegree.c(); }
    i64 index() const;
};

inline CayleyGenerators cayley_generators(const CandidateData& cand) {
    return CayleyGenerators{cand.space, cand.multidegree};
}

/// dim R_{(m,p)}: monomials x^r y^e with sum r_i a_i - sum e_j d_j = m and
/// sum e_j = p.
i64 free_component_dim(const CayleyGenerators& gen, i64 m, int p);

/// dim R(F)_{(m,p)} for a generic quasi-smooth member, at the bidegrees the
/// Hodge theory of the family lives in: m must equal -index and
/// 0 <= p <= dim + 1. See hodge.cpp for how this is evaluated.
i64 jacobian_component_dim(const CayleyGenerators& gen, i64 m, int p);

/// chi(X, O_X(k)) for any integer k, through the Koszul resolution of X and
/// Serre duality on the ambient space.
i64 chi_structure_twist(const CayleyGenerators& gen, i64 k);

/// chi(X, Omega^p_X), expanding Omega^p through the Euler and conormal
/// sequences into twisted structure-sheaf characteristics.
i64 chi_cotangent(const CayleyGenerators& gen, int p);

/// Middle Hodge numbers (h^{m,0}, ..., h^{0,m}) of a smooth well-formed
/// member of the family, m = dim >= 3.
std::vector<i64> middle_hodge(const CandidateData& cand);

/// Middle Hodge numbers of a smooth complete intersection of the given
/// degrees in ordinary P^n (all weights 1), via the classical bivariate
/// generating function. Independent of middle_hodge.
std::vector<i64> hirzebruch_middle(const Multidegree& degrees, int n);

}  // namespace wfano
