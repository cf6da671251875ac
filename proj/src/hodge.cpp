#include "wfano/hodge.hpp"

#include <map>

#include "wfano/invariants.hpp"

// dim R(F)_{(m,p)} cannot be read off the Koszul complex of the n+1+c
// Jacobian relations: they are never a regular sequence, because F has
// bidegree (0,1) and so the Euler identity
//     sum a_i x_i dF/dx_i - sum d_j y_j dF/dy_j = 0
// is a syzygy in bidegree (0,1). (Witness: for the cubic fourfold the
// alternating sum gives 19 at (-3,2) where dim R(F)_{(-3,2)} = 20.)
//
// Instead we evaluate the components through the Hodge theory they encode.
// X is smooth and misses the singular locus of the ambient space, so the
// Euler sequence of reflexive differentials and the conormal sequence both
// restrict to exact bundle sequences on X, giving in K-theory
//     [Omega^1_X] = sum_i [O_X(-a_i)] - [O_X] - sum_j [O_X(-d_j)].
// Lambda-operations expand [Omega^p_X] into a finite sum of line bundle
// classes, chi(O_X(k)) is exact arithmetic via the Koszul resolution of X
// and Serre duality on the ambient, and h^{p,q}(X) = delta_{pq} off the
// middle row then pins every middle Hodge number from chi(Omega^p_X).
// Components with p + (m - p) even pick up the ambient (p,p)-class, which
// is the +1 seen in middle_hodge.

namespace wfano {

i64 CayleyGenerators::index() const {
    return checked_sub(space.sum(), multidegree.sum());
}

namespace {

i64 free_component_rec(const CayleyGenerators& gen, i64 m, int p, size_t j, i64 dsum,
                       i64& total) {
    const auto& d = gen.multidegree.degrees;
    if (j + 1 == d.size()) {
        // last exponent is forced to p
        i64 r = m + checked_add(dsum, checked_mul(d[j], p));
        total = checked_add(total, monomial_count(r, gen.space));
        return total;
    }
    for (int e = 0; e <= p; ++e)
        free_component_rec(gen, m, p - e, j + 1, checked_add(dsum, checked_mul(d[j], e)), total);
    return total;
}

// Laurent polynomial in one variable z, exponent -> coefficient.
using Laurent = std::map<i64, i64>;

void add_term(Laurent& p, i64 exponent, i64 coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = p.emplace(exponent, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) p.erase(it);
    }
}

// Truncated series in t with Laurent coefficients: index s is the t^s term.
using TSeries = std::vector<Laurent>;

// Multiply by (1 + t z^w).
void mul_linear(TSeries& f, i64 w) {
    for (size_t s = f.size(); s-- > 1;)
        for (const auto& [e, c] : f[s - 1]) add_term(f[s], e + w, c);
}

// Divide by (1 + t z^w), i.e. multiply by sum_q (-1)^q t^q z^{qw}.
void div_linear(TSeries& f, i64 w) {
    for (size_t s = 1; s < f.size(); ++s)
        for (const auto& [e, c] : f[s - 1]) add_term(f[s], e + w, -c);
}

// Coefficients c_{p,k} with [Omega^p_X] = sum_k c_{p,k} [O_X(k)].
Laurent cotangent_class(const CayleyGenerators& gen, int p) {
    TSeries f(static_cast<size_t>(p) + 1);
    f[0][0] = 1;
    for (i64 a : gen.space.weights) mul_linear(f, -a);
    div_linear(f, 0);
    for (i64 d : gen.multidegree.degrees) div_linear(f, -d);
    return f[static_cast<size_t>(p)];
}

}  // namespace

i64 free_component_dim(const CayleyGenerators& gen, i64 m, int p) {
    if (p < 0) return 0;
    i64 total = 0;
    free_component_rec(gen, m, p, 0, 0, total);
    return total;
}

i64 chi_structure_twist(const CayleyGenerators& gen, i64 k) {
    const auto& d = gen.multidegree.degrees;
    int n = gen.space.n();
    i64 weight_sum = gen.space.sum();
    int c = gen.multidegree.c();
    i64 chi = 0;
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        i64 r = k;
        int parity = 0;
        for (int j = 0; j < c; ++j)
            if (mask & (1u << j)) {
                r -= d[static_cast<size_t>(j)];
                parity ^= 1;
            }
        i64 amb = monomial_count(r, gen.space);
        i64 dual = monomial_count(-r - weight_sum, gen.space);
        i64 term = (n % 2 == 0) ? checked_add(amb, dual) : checked_sub(amb, dual);
        chi = parity ? checked_sub(chi, term) : checked_add(chi, term);
    }
    return chi;
}

i64 chi_cotangent(const CayleyGenerators& gen, int p) {
    i64 chi = 0;
    for (const auto& [k, coeff] : cotangent_class(gen, p))
        chi = checked_add(chi, checked_mul(coeff, chi_structure_twist(gen, k)));
    return chi;
}

i64 jacobian_component_dim(const CayleyGenerators& gen, i64 m, int p) {
    int dim = gen.dim();
    if (m != -gen.index())
        throw std::domain_error(
            "jacobian_component_dim: first degree must be minus the index of the family");
    if (p < 0 || p > dim + 1)
        throw std::domain_error("jacobian_component_dim: p out of range");
    if (p == dim + 1) return 0;
    i64 chi = chi_cotangent(gen, p);
    i64 value;
    if (2 * p != dim) {
        i64 sign_p = (p % 2 == 0) ? 1 : -1;
        i64 primitive = checked_sub(chi, sign_p);
        value = ((dim - p) % 2 == 0) ? primitive : -primitive;
    } else {
        value = checked_sub((p % 2 == 0) ? chi : -chi, 1);
    }
    return value;
}

std::vector<i64> middle_hodge(const CandidateData& cand) {
    if (cand.dim() < 3)
        throw std::domain_error("middle_hodge: requires dimension at least 3");
    CayleyGenerators gen = cayley_generators(cand);
    int m = cand.dim();
    i64 index = gen.index();
    std::vector<i64> row(static_cast<size_t>(m) + 1);
    for (int p = 0; p <= m; ++p) {
        i64 h = jacobian_component_dim(gen, -index, p);
        if (2 * p == m) h = checked_add(h, 1);
        if (h < 0)
            throw std::runtime_error("middle_hodge: negative component at p=" +
                                     std::to_string(p) + " (family is not smooth)");
        row[static_cast<size_t>(p)] = h;
    }
    return row;
}

namespace {

BivariateSeries hirzebruch_single(i64 d, int order) {
    int e = static_cast<int>(d);
    std::vector<i64> pow_d1 = binomial_expansion(e - 1);
    std::vector<i64> pow_d = binomial_expansion(e);
    // numerator (y+1)^{d-1} - (z+1)^{d-1}
    BivariatePoly num = BivariatePoly::zero(e - 1, e - 1);
    for (int i = 0; i <= e - 1; ++i) {
        num.coeff[static_cast<size_t>(i)][0] =
            checked_add(num.coeff[static_cast<size_t>(i)][0], pow_d1[static_cast<size_t>(i)]);
        num.coeff[0][static_cast<size_t>(i)] =
            checked_sub(num.coeff[0][static_cast<size_t>(i)], pow_d1[static_cast<size_t>(i)]);
    }
    // denominator (z+1)^d y - (y+1)^d z
    BivariatePoly den = BivariatePoly::zero(e, e);
    for (int i = 0; i <= e; ++i) {
        den.coeff[1][static_cast<size_t>(i)] =
            checked_add(den.coeff[1][static_cast<size_t>(i)], pow_d[static_cast<size_t>(i)]);
        den.coeff[static_cast<size_t>(i)][1] =
            checked_sub(den.coeff[static_cast<size_t>(i)][1], pow_d[static_cast<size_t>(i)]);
    }
    BivariateSeries num_reduced = num.divide_by_y_minus_z().truncate(order);
    BivariateSeries den_reduced = den.divide_by_y_minus_z().truncate(order);
    if (den_reduced.at(0, 0) != 1)
        throw std::runtime_error("hirzebruch: reduced denominator is not a unit");
    return num_reduced * den_reduced.inverse();
}

}  // namespace

std::vector<i64> hirzebruch_middle(const Multidegree& degrees, int n) {
    int c = degrees.c();
    int m = n - c;
    if (m < 1) throw std::invalid_argument("hirzebruch_middle: dimension must be positive");
    if (c > 20) throw std::invalid_argument("hirzebruch_middle: too many degrees");

    std::vector<BivariateSeries> single;
    single.reserve(static_cast<size_t>(c));
    for (i64 d : degrees.degrees) single.push_back(hirzebruch_single(d, m));

    // (y+1)(z+1), the subset-size factor
    BivariateSeries corner(m);
    corner.set(0, 0, 1);
    if (m >= 1) {
        corner.set(1, 0, 1);
        corner.set(0, 1, 1);
    }
    if (m >= 2) corner.set(1, 1, 1);

    BivariateSeries total(m);
    for (unsigned mask = 1; mask < (1u << c); ++mask) {
        BivariateSeries term = BivariateSeries::one(m);
        int size = 0;
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i)) {
                term = term * single[static_cast<size_t>(i)];
                ++size;
            }
        for (int s = 1; s < size; ++s) term = term * corner;
        total = total + term;
    }
    if (m % 2 == 0) total.add(m / 2, m / 2, 1);

    std::vector<i64> row(static_cast<size_t>(m) + 1);
    for (int p = 0; p <= m; ++p) row[static_cast<size_t>(p)] = total.at(m - p, p);
    return row;
}

}  // namespace wfano
