#include "wfano/series.hpp"

namespace wfano {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int k = std::min(order(), o.order());
    TruncatedSeries r(k);
    for (int i = 0; i <= k; ++i) r.set(i, checked_add((*this)[i], o[i]));
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int k = std::min(order(), o.order());
    TruncatedSeries r(k);
    for (int i = 0; i <= k; ++i) {
        if ((*this)[i] == 0) continue;
        for (int j = 0; i + j <= k; ++j) {
            if (o[j] == 0) continue;
            r.set(i + j, checked_add(r[i + j], checked_mul((*this)[i], o[j])));
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::times_one_minus_power(i64 a) const {
    if (a <= 0) throw std::invalid_argument("times_one_minus_power: exponent must be positive");
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) {
        i64 v = (*this)[k];
        if (k >= a) v = checked_sub(v, (*this)[k - static_cast<int>(a)]);
        r.set(k, v);
    }
    return r;
}

TruncatedSeries TruncatedSeries::over_one_minus_power(i64 a) const {
    if (a <= 0) throw std::invalid_argument("over_one_minus_power: exponent must be positive");
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) {
        i64 v = (*this)[k];
        if (k >= a) v = checked_add(v, r[k - static_cast<int>(a)]);
        r.set(k, v);
    }
    return r;
}

TruncatedSeries TruncatedSeries::over_unit(const TruncatedSeries& u) const {
    i64 u0 = u[0];
    if (u0 != 1 && u0 != -1)
        throw std::invalid_argument("over_unit: constant term must be +1 or -1");
    int k = std::min(order(), u.order());
    TruncatedSeries q(k);
    for (int i = 0; i <= k; ++i) {
        i64 acc = (*this)[i];
        for (int j = 1; j <= i; ++j)
            acc = checked_sub(acc, checked_mul(u[j], q[i - j]));
        q.set(i, u0 == 1 ? acc : -acc);
    }
    return q;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    int m = std::min(max_, o.max_);
    BivariateSeries r(m);
    for (int t = 0; t <= m; ++t)
        for (int j = 0; j <= t; ++j) r.set(t - j, j, checked_add(at(t - j, j), o.at(t - j, j)));
    return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    int m = std::min(max_, o.max_);
    BivariateSeries r(m);
    for (int t1 = 0; t1 <= m; ++t1)
        for (int j1 = 0; j1 <= t1; ++j1) {
            i64 a = at(t1 - j1, j1);
            if (a == 0) continue;
            for (int t2 = 0; t1 + t2 <= m; ++t2)
                for (int j2 = 0; j2 <= t2; ++j2) {
                    i64 b = o.at(t2 - j2, j2);
                    if (b == 0) continue;
                    r.add(t1 + t2 - j1 - j2, j1 + j2, checked_mul(a, b));
                }
        }
    return r;
}

BivariateSeries BivariateSeries::inverse() const {
    i64 c0 = at(0, 0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("BivariateSeries::inverse: constant term must be +1 or -1");
    BivariateSeries inv(max_);
    inv.set(0, 0, c0);
    for (int t = 1; t <= max_; ++t)
        for (int j = 0; j <= t; ++j) {
            int i = t - j;
            // convolution of inv with *this must vanish at (i, j)
            i64 acc = 0;
            for (int t2 = 1; t2 <= t; ++t2)
                for (int j2 = 0; j2 <= t2; ++j2) {
                    int i2 = t2 - j2;
                    if (i2 > i || j2 > j) continue;
                    i64 a = at(i2, j2);
                    if (a == 0) continue;
                    acc = checked_add(acc, checked_mul(a, inv.at(i - i2, j - j2)));
                }
            inv.set(i, j, c0 == 1 ? -acc : acc);
        }
    return inv;
}

BivariatePoly BivariatePoly::zero(int ydeg, int zdeg) {
    BivariatePoly p;
    p.coeff.assign(static_cast<size_t>(ydeg) + 1,
                   std::vector<i64>(static_cast<size_t>(zdeg) + 1, 0));
    return p;
}

BivariatePoly BivariatePoly::divide_by_y_minus_z() const {
    // Treat as a polynomial in y over Z[z]; (y - z) is monic of degree 1.
    // Intermediate quotient coefficients can carry z-degree up to dy + dz.
    int dy = ydeg(), dz = zdeg();
    if (dy < 1) throw std::invalid_argument("divide_by_y_minus_z: y-degree too small");
    int qz = dy + dz;
    BivariatePoly q = zero(dy - 1, qz);
    std::vector<i64> carry(static_cast<size_t>(qz) + 1, 0);  // current quotient coeff in z
    for (int i = dy - 1; i >= 0; --i) {
        // q_i = p_{i+1} + z * q_{i+1}
        std::vector<i64> qi(static_cast<size_t>(qz) + 1, 0);
        for (int j = 0; j <= qz; ++j) {
            i64 v = at(i + 1, j);
            if (j > 0) v = checked_add(v, carry[static_cast<size_t>(j - 1)]);
            qi[static_cast<size_t>(j)] = v;
        }
        q.coeff[static_cast<size_t>(i)] = qi;
        carry = std::move(qi);
    }
    // remainder r(z) = p_0 + z * q_0 must vanish identically
    for (int j = 0; j <= qz + 1; ++j) {
        i64 r = at(0, j);
        if (j > 0) r = checked_add(r, q.at(0, j - 1));
        if (r != 0) throw std::runtime_error("divide_by_y_minus_z: nonzero remainder");
    }
    return q;
}

BivariateSeries BivariatePoly::truncate(int max_total) const {
    BivariateSeries s(max_total);
    for (int i = 0; i <= ydeg(); ++i)
        for (int j = 0; j <= zdeg(); ++j)
            if (i + j <= max_total) s.set(i, j, at(i, j));
    return s;
}

std::vector<i64> binomial_expansion(int e) {
    std::vector<i64> c(static_cast<size_t>(e) + 1);
    for (int k = 0; k <= e; ++k) c[static_cast<size_t>(k)] = binomial(e, k);
    return c;
}

}  // namespace wfano
