#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wfano/core.hpp"

namespace wfano {

/// Outcome of one or more necessary-condition checks. The verdict is true
/// exactly when failed_checks is empty; each failure carries the check name
/// and a short witness (the delta or index pair that broke it).
struct FilterReport {
    bool verdict = true;
    std::vector<std::pair<std::string, std::string>> failed_checks;

    void fail(std::string check, std::string witness) {
        verdict = false;
        failed_checks.emplace_back(std::move(check), std::move(witness));
    }
    void merge(const FilterReport& o) {
        verdict = verdict && o.verdict;
        failed_checks.insert(failed_checks.end(), o.failed_checks.begin(),
                             o.failed_checks.end());
    }
};

/// No degree may equal a weight (such an equation eliminates a variable).
FilterReport check_not_linear_cone(const CandidateData& cand);

/// d_{c-k} > a_{n-k} for 1 <= k <= c-1, and d_c >= 2 a_n.
FilterReport check_degree_order(const CandidateData& cand);

/// prod a_i divides prod d_j, in exact integers.
FilterReport check_product_divisibility(const CandidateData& cand);

/// For every delta >= 2, at least as many degrees as weights are divisible
/// by delta.
FilterReport check_gcd_counts(const CandidateData& cand);

/// For every singular stratum S_delta, at least |S_delta| of the degrees are
/// representable over the stratum weights; otherwise every member of the
/// family meets the singular locus.
FilterReport check_stratum_avoidance(const CandidateData& cand);

/// Weight and degree bounds for the given mode:
///   fano:       a_i <= n, d_j <= n(n+1), sum a > sum d, c <= dim,
///               a_0 = a_1 = 1, and a_k^(dim-k+1) <= 2^dim for 1 <= k <= dim;
///   calabi_yau: a_i <= n+1, d_j <= (n+1)^2, sum a = sum d, c <= dim + 1.
FilterReport check_bounds(const CandidateData& cand, Mode mode);

/// Every degree is representable over the full weight list, and no value v
/// occurs among the degrees more often than there are monomials of degree v.
FilterReport check_realizable_multidegree(const CandidateData& cand);

/// Conjunction of all checks above plus well-formedness of the space.
FilterReport run_all_filters(const CandidateData& cand, Mode mode);

}  // namespace wfano
