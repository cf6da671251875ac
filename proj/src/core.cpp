#include "wfano/core.hpp"

#include <algorithm>
#include <numeric>

namespace wfano {

i64 WeightSystem::sum() const {
    i64 s = 0;
    for (i64 a : weights) s = checked_add(s, a);
    return s;
}

i64 Multidegree::sum() const {
    i64 s = 0;
    for (i64 d : degrees) s = checked_add(s, d);
    return s;
}

CandidateData normalize(std::vector<i64> weights, std::vector<i64> degrees) {
    if (weights.size() < 3)
        throw std::invalid_argument("normalize: need at least three weights");
    if (degrees.empty())
        throw std::invalid_argument("normalize: need at least one degree (c >= 1)");
    for (i64 a : weights)
        if (a < 1) throw std::invalid_argument("normalize: weights must be positive");
    for (i64 d : degrees)
        if (d <= 1)
            throw std::invalid_argument(
                "normalize: degrees must be >= 2 (degree-1 equations cut linear cones)");
    std::sort(weights.begin(), weights.end());
    std::sort(degrees.begin(), degrees.end());
    CandidateData cand{WeightSystem{std::move(weights)}, Multidegree{std::move(degrees)}};
    if (cand.dim() < 1)
        throw std::invalid_argument("normalize: dimension n - c must be at least 1");
    return cand;
}

bool is_well_formed(const WeightSystem& space) {
    const auto& a = space.weights;
    // gcd of all weights except position i, via prefix/suffix gcds
    size_t k = a.size();
    std::vector<i64> pre(k + 1, 0), suf(k + 1, 0);
    for (size_t i = 0; i < k; ++i) pre[i + 1] = std::gcd(pre[i], a[i]);
    for (size_t i = k; i-- > 0;) suf[i] = std::gcd(suf[i + 1], a[i]);
    for (size_t i = 0; i < k; ++i)
        if (std::gcd(pre[i], suf[i + 1]) != 1) return false;
    return true;
}

std::map<i64, std::vector<int>> stratum_table(const WeightSystem& space) {
    std::map<i64, std::vector<int>> table;
    for (i64 delta = 2; delta <= space.max(); ++delta) {
        std::vector<int> members;
        for (int i = 0; i <= space.n(); ++i)
            if (space.weights[i] % delta == 0) members.push_back(i);
        if (!members.empty()) table.emplace(delta, std::move(members));
    }
    return table;
}

bool representable(i64 d, std::span<const i64> sub_weights) {
    if (d < 0) return false;
    if (d == 0) return true;
    if (d > 50'000'000)
        throw std::invalid_argument("representable: degree too large for DP table");
    std::vector<char> reach(static_cast<size_t>(d) + 1, 0);
    reach[0] = 1;
    for (i64 w : sub_weights) {
        if (w <= 0) throw std::invalid_argument("representable: weights must be positive");
        if (w > d) continue;
        for (i64 s = w; s <= d; ++s)
            if (reach[static_cast<size_t>(s - w)]) reach[static_cast<size_t>(s)] = 1;
    }
    return reach[static_cast<size_t>(d)] != 0;
}

}  // namespace wfano
