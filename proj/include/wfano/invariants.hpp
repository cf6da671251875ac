#pragma once

#include "wfano/core.hpp"
#include "wfano/series.hpp"

namespace wfano {

/// P(r): the number of monomials of weighted degree r in the coordinates of
/// the given space, i.e. the coefficient of t^r in prod 1/(1 - t^{a_i}).
/// P(r) = 0 for r < 0 and P(0) = 1. Backed by a process-wide memo keyed on
/// the weight multiset; results are identical from any thread.
i64 monomial_count(i64 r, const WeightSystem& space);

/// Sum of weights minus sum of degrees. No sign restriction.
i64 index_of(const CandidateData& cand);

/// (prod d_j / prod a_i) * I^dim as a reduced exact rational.
/// Requires index > 0; throws std::domain_error otherwise.
Rational anticanonical_degree(const CandidateData& cand);

/// Coefficients of prod (1 - t^{d_j}) / prod (1 - t^{a_i}) up to order K.
/// Coefficient k is dim H^0(X, O_X(k)) for the corresponding variety.
TruncatedSeries hilbert_series(const CandidateData& cand, int order);

/// dim H^0(X, -K_X) as the alternating sum over degree subsets T of
/// P(I - sum_{j in T} d_j).
i64 h0_anticanonical(const CandidateData& cand);

}  // namespace wfano
