#include "wfano/invariants.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace wfano {

namespace {

// P(r) tables keyed by weight multiset. Readers take a snapshot shared_ptr;
// a grown table replaces the map entry wholesale, so concurrent lookups are
// safe and always agree.
std::mutex p_cache_mutex;
std::map<std::vector<i64>, std::shared_ptr<const std::vector<i64>>> p_cache;

std::shared_ptr<const std::vector<i64>> monomial_count_table(const std::vector<i64>& weights,
                                                             i64 min_len) {
    std::lock_guard<std::mutex> lock(p_cache_mutex);
    auto it = p_cache.find(weights);
    if (it != p_cache.end() && static_cast<i64>(it->second->size()) >= min_len)
        return it->second;
    i64 len = std::max<i64>(min_len, 128);
    if (it != p_cache.end()) len = std::max(len, 2 * static_cast<i64>(it->second->size()));
    auto table = std::make_shared<std::vector<i64>>(static_cast<size_t>(len), 0);
    (*table)[0] = 1;
    for (i64 a : weights)
        for (i64 s = a; s < len; ++s)
            (*table)[static_cast<size_t>(s)] = checked_add(
                (*table)[static_cast<size_t>(s)], (*table)[static_cast<size_t>(s - a)]);
    p_cache[weights] = table;
    return table;
}

}  // namespace

i64 monomial_count(i64 r, const WeightSystem& space) {
    if (r < 0) return 0;
    if (r > 5'000'000)
        throw std::invalid_argument("monomial_count: degree too large for DP table");
    auto table = monomial_count_table(space.weights, r + 1);
    return (*table)[static_cast<size_t>(r)];
}

i64 index_of(const CandidateData& cand) {
    return checked_sub(cand.space.sum(), cand.multidegree.sum());
}

Rational anticanonical_degree(const CandidateData& cand) {
    i64 index = index_of(cand);
    if (index <= 0)
        throw std::domain_error("anticanonical_degree: defined only for positive index");
    Rational deg(1);
    for (i64 d : cand.multidegree.degrees) deg = deg * Rational(d);
    for (i64 a : cand.space.weights) deg = deg * Rational(1, a);
    return deg * Rational(checked_pow(index, cand.dim()));
}

TruncatedSeries hilbert_series(const CandidateData& cand, int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (i64 d : cand.multidegree.degrees) s = s.times_one_minus_power(d);
    for (i64 a : cand.space.weights) s = s.over_one_minus_power(a);
    return s;
}

i64 h0_anticanonical(const CandidateData& cand) {
    i64 index = index_of(cand);
    const auto& degrees = cand.multidegree.degrees;
    int c = cand.multidegree.c();
    i64 total = 0;
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        i64 r = index;
        int parity = 0;
        for (int j = 0; j < c; ++j)
            if (mask & (1u << j)) {
                r -= degrees[static_cast<size_t>(j)];
                parity ^= 1;
            }
        i64 term = monomial_count(r, cand.space);
        total = parity ? checked_sub(total, term) : checked_add(total, term);
    }
    return total;
}

}  // namespace wfano
