#include "wfano/filters.hpp"

#include <algorithm>

#include "wfano/invariants.hpp"

namespace wfano {

FilterReport check_not_linear_cone(const CandidateData& cand) {
    FilterReport report;
    for (i64 d : cand.multidegree.degrees)
        if (std::binary_search(cand.space.weights.begin(), cand.space.weights.end(), d)) {
            report.fail("not_linear_cone", "d=" + std::to_string(d) + " equals a weight");
            break;
        }
    return report;
}

FilterReport check_degree_order(const CandidateData& cand) {
    FilterReport report;
    const auto& a = cand.space.weights;
    const auto& d = cand.multidegree.degrees;
    int n = cand.space.n(), c = cand.multidegree.c();
    for (int k = 1; k <= c - 1; ++k) {
        i64 dk = d[static_cast<size_t>(c - k - 1)];   // d_{c-k}, 1-based
        i64 ak = a[static_cast<size_t>(n - k)];       // a_{n-k}, 0-based
        if (dk <= ak) {
            report.fail("degree_order", "d_" + std::to_string(c - k) + "=" + std::to_string(dk) +
                                            " <= a_" + std::to_string(n - k) + "=" +
                                            std::to_string(ak));
            break;
        }
    }
    if (d.back() < 2 * a.back())
        report.fail("degree_order",
                    "d_c=" + std::to_string(d.back()) + " < 2a_n=" + std::to_string(2 * a.back()));
    return report;
}

FilterReport check_product_divisibility(const CandidateData& cand) {
    FilterReport report;
    i128 prod_a = 1, prod_d = 1;
    for (i64 a : cand.space.weights) prod_a = checked_mul(prod_a, static_cast<i128>(a));
    for (i64 d : cand.multidegree.degrees) prod_d = checked_mul(prod_d, static_cast<i128>(d));
    if (prod_d % prod_a != 0)
        report.fail("product_divisibility",
                    to_string(prod_a) + " does not divide " + to_string(prod_d));
    return report;
}

FilterReport check_gcd_counts(const CandidateData& cand) {
    FilterReport report;
    const auto& d = cand.multidegree.degrees;
    for (const auto& [delta, members] : stratum_table(cand.space)) {
        size_t degree_count = 0;
        for (i64 dj : d)
            if (dj % delta == 0) ++degree_count;
        if (degree_count < members.size()) {
            report.fail("gcd_counts", "delta=" + std::to_string(delta) + ": " +
                                          std::to_string(members.size()) + " weights vs " +
                                          std::to_string(degree_count) + " degrees divisible");
            break;
        }
    }
    return report;
}

FilterReport check_stratum_avoidance(const CandidateData& cand) {
    FilterReport report;
    const auto& a = cand.space.weights;
    const auto& d = cand.multidegree.degrees;
    for (const auto& [delta, members] : stratum_table(cand.space)) {
        std::vector<i64> stratum_weights;
        stratum_weights.reserve(members.size());
        for (int i : members) stratum_weights.push_back(a[static_cast<size_t>(i)]);
        size_t restricting = 0;
        for (i64 dj : d)
            if (representable(dj, stratum_weights)) ++restricting;
        if (restricting < members.size()) {
            report.fail("stratum_avoidance",
                        "delta=" + std::to_string(delta) + ": only " +
                            std::to_string(restricting) + " of " + std::to_string(d.size()) +
                            " degrees restrict to a stratum of size " +
                            std::to_string(members.size()));
            break;
        }
    }
    return report;
}

FilterReport check_bounds(const CandidateData& cand, Mode mode) {
    FilterReport report;
    const auto& a = cand.space.weights;
    const auto& d = cand.multidegree.degrees;
    i64 n = cand.space.n();
    int c = cand.multidegree.c();
    int m = cand.dim();
    if (mode == Mode::fano) {
        if (a.back() > n)
            report.fail("bounds", "a_n=" + std::to_string(a.back()) + " > n=" + std::to_string(n));
        if (d.back() > checked_mul(n, n + 1))
            report.fail("bounds", "d_c=" + std::to_string(d.back()) + " > n(n+1)");
        if (cand.space.sum() <= cand.multidegree.sum())
            report.fail("bounds", "sum a <= sum d (not Fano)");
        if (c > m) report.fail("bounds", "codimension " + std::to_string(c) + " > dim");
        if (a[0] != 1 || a[1] != 1) report.fail("bounds", "a_0 = a_1 = 1 fails");
        // a_k <= 2^(m / (m - k + 1)) in the exact integer form a_k^(m-k+1) <= 2^m
        for (int k = 1; k <= m && k <= cand.space.n(); ++k) {
            i64 lhs = checked_pow(a[static_cast<size_t>(k)], m - k + 1);
            if (lhs > checked_pow(2, m)) {
                report.fail("bounds", "a_" + std::to_string(k) + "=" +
                                          std::to_string(a[static_cast<size_t>(k)]) +
                                          " exceeds the per-position cap");
                break;
            }
        }
    } else {
        if (a.back() > n + 1)
            report.fail("bounds",
                        "a_n=" + std::to_string(a.back()) + " > n+1=" + std::to_string(n + 1));
        if (d.back() > checked_mul(n + 1, n + 1))
            report.fail("bounds", "d_c=" + std::to_string(d.back()) + " > (n+1)^2");
        if (cand.space.sum() != cand.multidegree.sum())
            report.fail("bounds", "sum a != sum d (not Calabi-Yau)");
        if (c > m + 1) report.fail("bounds", "codimension " + std::to_string(c) + " > dim+1");
    }
    return report;
}

FilterReport check_realizable_multidegree(const CandidateData& cand) {
    FilterReport report;
    const auto& d = cand.multidegree.degrees;
    for (i64 dj : d)
        if (!representable(dj, cand.space.weights)) {
            report.fail("realizable_multidegree",
                        "no monomial of degree " + std::to_string(dj));
            return report;
        }
    for (size_t i = 0; i < d.size();) {
        size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        i64 count = static_cast<i64>(j - i);
        i64 monomials = monomial_count(d[i], cand.space);
        if (count > monomials) {
            report.fail("realizable_multidegree",
                        std::to_string(count) + " equations of degree " + std::to_string(d[i]) +
                            " but only " + std::to_string(monomials) + " monomials");
            break;
        }
        i = j;
    }
    return report;
}

FilterReport run_all_filters(const CandidateData& cand, Mode mode) {
    FilterReport report;
    if (!is_well_formed(cand.space))
        report.fail("well_formed", "some n weights share a common factor");
    report.merge(check_not_linear_cone(cand));
    report.merge(check_degree_order(cand));
    report.merge(check_product_divisibility(cand));
    report.merge(check_gcd_counts(cand));
    report.merge(check_stratum_avoidance(cand));
    report.merge(check_bounds(cand, mode));
    report.merge(check_realizable_multidegree(cand));
    return report;
}

}  // namespace wfano
