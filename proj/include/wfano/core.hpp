#pragma once

#include <map>
#include <span>
#include <vector>

#include "wfano/checked.hpp"

namespace wfano {

/// Ambient weights (a_0,...,a_n), kept sorted ascending, every a_i >= 1,
/// at least three of them.
struct WeightSystem {
    std::vector<i64> weights;

    int n() const { return static_cast<int>(weights.size()) - 1; }
    i64 sum() const;
    i64 max() const { return weights.back(); }

    bool operator==(const WeightSystem&) const = default;
};

/// Degrees (d_1,...,d_c), sorted ascending, every d_j >= 2.
struct Multidegree {
    std::vector<i64> degrees;

    int c() const { return static_cast<int>(degrees.size()); }
    i64 sum() const;

    bool operator==(const Multidegree&) const = default;
};

/// A numerical candidate: weights plus degrees with dim = n - c >= 1.
/// Pure data; there is no geometry attached.
struct CandidateData {
    WeightSystem space;
    Multidegree multidegree;

    int dim() const { return space.n() - multidegree.c(); }

    bool operator==(const CandidateData&) const = default;
    bool operator<(const CandidateData& o) const {
        if (space.weights != o.space.weights) return space.weights < o.space.weights;
        return multidegree.degrees < o.multidegree.degrees;
    }
};

enum class Mode { fano, calabi_yau };

/// Sorts both lists ascending and validates the construction invariants.
/// Throws std::invalid_argument on: empty lists, weights < 1, fewer than
/// three weights, any degree <= 1 (an equation of degree one cuts a linear
/// cone), c = 0, or dim < 1.
CandidateData normalize(std::vector<i64> weights, std::vector<i64> degrees);

/// True iff every n of the n+1 weights are coprime.
bool is_well_formed(const WeightSystem& space);

/// For every delta in 2..a_n with at least one weight divisible by delta,
/// the set of indices of divisible weights. These index the maximal
/// coordinate strata along which the ambient space is singular.
std::map<i64, std::vector<int>> stratum_table(const WeightSystem& space);

/// Whether d is a sum of the given weights with non-negative multiplicities
/// (numerical semigroup membership, by dynamic programming over 0..d).
bool representable(i64 d, std::span<const i64> sub_weights);

}  // namespace wfano
