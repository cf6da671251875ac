#pragma once

#include <vector>

#include "wfano/checked.hpp"

namespace wfano {

/// Univariate power series in t truncated at order K, exact integer
/// coefficients c_0..c_K.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : coeff_(static_cast<size_t>(order) + 1, 0) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    i64 operator[](int k) const {
        return (k < 0 || k > order()) ? 0 : coeff_[static_cast<size_t>(k)];
    }
    void set(int k, i64 v) { coeff_.at(static_cast<size_t>(k)) = v; }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.set(0, 1);
        return s;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    /// Multiply by the polynomial (1 - t^a).
    TruncatedSeries times_one_minus_power(i64 a) const;

    /// Divide by (1 - t^a), i.e. multiply by 1 + t^a + t^{2a} + ...
    /// (cumulative-sum recurrence, exact).
    TruncatedSeries over_one_minus_power(i64 a) const;

    /// Divide by a series with unit constant term (+1 or -1).
    TruncatedSeries over_unit(const TruncatedSeries& u) const;

    const std::vector<i64>& coefficients() const { return coeff_; }

  private:
    std::vector<i64> coeff_;
};

/// Bivariate power series in (y, z) truncated at total degree M, exact
/// integer coefficients, dense triangular storage.
class BivariateSeries {
  public:
    explicit BivariateSeries(int max_total) : max_(max_total) {
        if (max_total < 0) throw std::invalid_argument("BivariateSeries: negative order");
        coeff_.assign(static_cast<size_t>((max_ + 1) * (max_ + 2) / 2), 0);
    }

    int max_total() const { return max_; }
    i64 at(int i, int j) const {
        if (i < 0 || j < 0 || i + j > max_) return 0;
        return coeff_[index(i, j)];
    }
    void set(int i, int j, i64 v) {
        if (i < 0 || j < 0 || i + j > max_)
            throw std::out_of_range("BivariateSeries::set: degree exceeds truncation");
        coeff_[index(i, j)] = v;
    }
    void add(int i, int j, i64 v) {
        if (i < 0 || j < 0 || i + j > max_) return;
        size_t p = index(i, j);
        coeff_[p] = checked_add(coeff_[p], v);
    }

    static BivariateSeries one(int max_total) {
        BivariateSeries s(max_total);
        s.set(0, 0, 1);
        return s;
    }

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;

    /// Inverse of a series with constant term +1 or -1.
    BivariateSeries inverse() const;

  private:
    size_t index(int i, int j) const {
        int t = i + j;  // entries grouped by total degree
        return static_cast<size_t>(t * (t + 1) / 2 + j);
    }

    int max_;
    std::vector<i64> coeff_;
};

/// Dense bivariate polynomial used for the exact (y - z) divisions; indexed
/// coeff[i][j] for y^i z^j.
struct BivariatePoly {
    std::vector<std::vector<i64>> coeff;  // coeff[i][j]

    int ydeg() const { return static_cast<int>(coeff.size()) - 1; }
    int zdeg() const { return coeff.empty() ? -1 : static_cast<int>(coeff[0].size()) - 1; }
    i64 at(int i, int j) const {
        if (i < 0 || i > ydeg() || j < 0 || j > zdeg()) return 0;
        return coeff[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    static BivariatePoly zero(int ydeg, int zdeg);

    /// Exact division by (y - z); throws if the remainder is nonzero.
    BivariatePoly divide_by_y_minus_z() const;

    /// Truncate to a BivariateSeries of the given total degree.
    BivariateSeries truncate(int max_total) const;
};

/// (v + 1)^e as a univariate integer polynomial, coefficients C(e, k).
std::vector<i64> binomial_expansion(int e);

}  // namespace wfano
