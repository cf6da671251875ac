#include <algorithm>
#include <sstream>

#include "appendix_internal.hpp"

namespace wfano::appendix {

using detail::draw_range;
using detail::ipow;
using detail::mix_seed;
using detail::Rng;

void LemmaRegionSpec::validate() const {
    auto integral = [](double v) { return v == std::floor(v); };
    switch (id) {
        case LemmaId::bb2dd:
            if (!(l >= 1 && integral(l) && r >= 0))
                throw std::invalid_argument("bb2dd: need integer l >= 1 and r >= 0");
            break;
        case LemmaId::aabb2dd:
            if (!(k >= 1 && l >= 0 && integral(l) && p >= 0 && r >= 0 && k + l + p > 2))
                throw std::invalid_argument(
                    "aabb2dd: need k >= 1, integer l >= 0, p >= 0, r >= 0, k+l+p > 2");
            break;
        case LemmaId::aa11ddd:
            if (!(k >= 1 && c >= 1 && l >= 0 && k + l > 2))
                throw std::invalid_argument("aa11ddd: need k >= 1, c >= 1, l >= 0, k+l > 2");
            break;
        case LemmaId::aabbdd:
            if (!(k >= 1 && l >= 0 && integral(l) && c >= 0 && k + l > 2))
                throw std::invalid_argument("aabbdd: need k >= 1, integer l >= 0, c >= 0, k+l > 2");
            break;
        case LemmaId::main:
            if (!(c >= 1 && N >= 2 * c + 1 && N >= 3))
                throw std::invalid_argument("main: need c >= 1 and N >= 2c+1");
            break;
    }
}

bool LemmaRegionSpec::analytically_empty() const {
    // aabb2dd with k >= 2, r = 0: A^{k-1} <= 2 forces A <= 2 < k+l+p.
    if (id == LemmaId::aabb2dd && k >= 2 && r == 0) return true;
    // aabbdd with c = 0: A^k B^l <= 1 forces A <= 1 < k+l.
    if (id == LemmaId::aabbdd && c == 0) return true;
    return false;
}

std::string LemmaRegionSpec::name() const {
    std::ostringstream out;
    switch (id) {
        case LemmaId::bb2dd: out << "bb2dd(l=" << l << ",r=" << r << ")"; break;
        case LemmaId::aabb2dd:
            out << "aabb2dd(k=" << k << ",l=" << l << ",p=" << p << ",r=" << r << ")";
            break;
        case LemmaId::aa11ddd: out << "aa11ddd(k=" << k << ",l=" << l << ",c=" << c << ")"; break;
        case LemmaId::aabbdd: out << "aabbdd(k=" << k << ",l=" << l << ",c=" << c << ")"; break;
        case LemmaId::main: out << "main(N=" << N << ",c=" << c << ")"; break;
    }
    return out.str();
}

int LemmaRegionSpec::dimension() const {
    switch (id) {
        case LemmaId::bb2dd: return 2;
        case LemmaId::aabb2dd: return 3;
        case LemmaId::aa11ddd: return 2;
        case LemmaId::aabbdd: return 3;
        case LemmaId::main: return N + c;
    }
    return 0;
}

namespace {

// prod x^lhs <= scale * prod x^rhs; a variable appears on at most one side.
struct Monomial {
    std::vector<int> lhs, rhs;
    double scale = 1.0;

    double lhs_value(const std::vector<double>& x) const {
        double v = 1.0;
        for (size_t i = 0; i < lhs.size(); ++i) v *= ipow(x[i], lhs[i]);
        return v;
    }
    double rhs_value(const std::vector<double>& x) const {
        double v = scale;
        for (size_t i = 0; i < rhs.size(); ++i) v *= ipow(x[i], rhs[i]);
        return v;
    }
};

// coeff . x <= rhs
struct Linear {
    std::vector<double> coeff;
    double rhs = 0;
};

struct Region {
    int dim = 0;
    std::vector<double> w;  // objective gradient
    double w0 = 0;
    std::vector<Monomial> monomials;
    std::vector<Linear> linears;
    std::vector<double> win_lo, win_hi;

    double objective(const std::vector<double>& x) const {
        double v = w0;
        for (int i = 0; i < dim; ++i) v += w[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        return v;
    }
};

Linear make_linear(int dim, std::initializer_list<std::pair<int, double>> terms, double rhs) {
    Linear lin;
    lin.coeff.assign(static_cast<size_t>(dim), 0.0);
    for (auto [i, v] : terms) lin.coeff[static_cast<size_t>(i)] = v;
    lin.rhs = rhs;
    return lin;
}

double aux_window(const LemmaRegionSpec& s, double scale) {
    return 64.0 * (s.k + s.l + s.p + s.r + s.c + 2) * scale;
}

Region build_region(const LemmaRegionSpec& s, double window_scale) {
    Region reg;
    int dim = s.dimension();
    reg.dim = dim;
    reg.w.assign(static_cast<size_t>(dim), 0.0);
    reg.win_lo.assign(static_cast<size_t>(dim), 1e-9);
    double W = aux_window(s, window_scale);
    reg.win_hi.assign(static_cast<size_t>(dim), W);
    switch (s.id) {
        case LemmaId::bb2dd: {
            // vars: B, D;  L = l B - r D - (l + 1)
            reg.w = {s.l, -static_cast<double>(s.r)};
            reg.w0 = -(s.l + 1);
            Monomial m;
            m.lhs = {static_cast<int>(s.l), 0};
            m.rhs = {0, s.r};
            m.scale = 2.0;
            reg.monomials.push_back(m);
            reg.linears.push_back(make_linear(2, {{0, 1.0}, {1, -1.0}}, 0.0));  // B <= D
            reg.linears.push_back(make_linear(2, {{0, -1.0}}, -1.0));           // B >= 1
            break;
        }
        case LemmaId::aabb2dd: {
            // vars: A, B, D;  L = (k-2) A + l B - r D + p
            reg.w = {static_cast<double>(s.k - 2), s.l, -static_cast<double>(s.r)};
            reg.w0 = s.p;
            Monomial m;
            m.lhs = {s.k - 1, static_cast<int>(s.l), 0};
            m.rhs = {0, 0, s.r};
            m.scale = 2.0;
            reg.monomials.push_back(m);
            reg.linears.push_back(make_linear(3, {{1, 1.0}, {0, -1.0}}, 0.0));  // B <= A
            reg.linears.push_back(make_linear(3, {{1, -1.0}}, -1.0));           // B >= 1
            reg.linears.push_back(make_linear(3, {{0, -1.0}}, -(s.k + s.l + s.p)));  // A >= k+l+p
            reg.linears.push_back(make_linear(3, {{1, 1.0}, {2, -1.0}}, 0.0));  // B <= D
            if (s.k >= 2)
                reg.linears.push_back(make_linear(3, {{0, 1.0}, {2, -1.0}}, 0.0));  // A <= D
            break;
        }
        case LemmaId::aa11ddd: {
            // vars: A, D;  L = k A - c D + l
            reg.w = {static_cast<double>(s.k), -static_cast<double>(s.c)};
            reg.w0 = s.l;
            Monomial m;
            m.lhs = {s.k, 0};
            m.rhs = {0, s.c};
            m.scale = 1.0;
            reg.monomials.push_back(m);
            reg.linears.push_back(make_linear(2, {{0, 2.0}, {1, -1.0}}, 0.0));  // 2A <= D
            reg.linears.push_back(make_linear(2, {{0, -1.0}}, -(s.k + s.l)));   // A >= k+l
            break;
        }
        case LemmaId::aabbdd: {
            // vars: A, B, D;  L = k A + l B - c D
            reg.w = {static_cast<double>(s.k), s.l, -static_cast<double>(s.c)};
            reg.w0 = 0;
            Monomial m;
            m.lhs = {s.k, static_cast<int>(s.l), 0};
            m.rhs = {0, 0, s.c};
            m.scale = 1.0;
            reg.monomials.push_back(m);
            reg.linears.push_back(make_linear(3, {{0, 2.0}, {2, -1.0}}, 0.0));  // 2A <= D
            reg.linears.push_back(make_linear(3, {{1, 1.0}, {0, -1.0}}, 0.0));  // B <= A
            reg.linears.push_back(make_linear(3, {{1, -1.0}}, -1.0));           // B >= 1
            reg.linears.push_back(make_linear(3, {{0, -1.0}}, -(s.k + s.l)));   // A >= k+l
            break;
        }
        case LemmaId::main: {
            // vars: A_1..A_N, D_1..D_c;  L = sum A - sum D on A_1 >= N
            int N = s.N, c = s.c;
            for (int i = 0; i < N; ++i) reg.w[static_cast<size_t>(i)] = 1.0;
            for (int j = 0; j < c; ++j) reg.w[static_cast<size_t>(N + j)] = -1.0;
            Monomial m;
            m.lhs.assign(static_cast<size_t>(dim), 0);
            m.rhs.assign(static_cast<size_t>(dim), 0);
            for (int i = 0; i < N; ++i) m.lhs[static_cast<size_t>(i)] = 1;
            for (int j = 0; j < c; ++j) m.rhs[static_cast<size_t>(N + j)] = 1;
            m.scale = 1.0;
            reg.monomials.push_back(m);
            for (int i = 0; i + 1 < N; ++i)  // A descending
                reg.linears.push_back(make_linear(dim, {{i + 1, 1.0}, {i, -1.0}}, 0.0));
            reg.linears.push_back(make_linear(dim, {{N - 1, -1.0}}, -1.0));  // A_N >= 1
            for (int j = 0; j + 1 < c; ++j)  // D descending
                reg.linears.push_back(make_linear(dim, {{N + j + 1, 1.0}, {N + j, -1.0}}, 0.0));
            for (int j = 1; j < c; ++j)  // D_k >= A_k for k = 2..c
                reg.linears.push_back(make_linear(dim, {{j, 1.0}, {N + j, -1.0}}, 0.0));
            reg.linears.push_back(make_linear(dim, {{0, 2.0}, {N, -1.0}}, 0.0));  // 2A_1 <= D_1
            reg.linears.push_back(make_linear(dim, {{0, -1.0}}, -static_cast<double>(N)));
            for (int i = 0; i < N; ++i) reg.win_hi[static_cast<size_t>(i)] = 10.0 * N * window_scale;
            for (int j = 0; j < c; ++j)
                reg.win_hi[static_cast<size_t>(N + j)] = 40.0 * N * window_scale;
            break;
        }
    }
    return reg;
}

// --- samplers ---------------------------------------------------------
// Variables with negative objective coefficient are sampled from their
// constraint floor upward (extending past the window when the floor sits
// above it); this is where the objective is large. Every draw is feasible
// by construction, so rejections only signal an empty window.

bool sample_point(const LemmaRegionSpec& s, const Region& reg, Rng& rng,
                  std::vector<double>& x) {
    x.assign(static_cast<size_t>(reg.dim), 0.0);
    int bias_hint = rng.coin() ? 0 : 1;  // half uniform, half skewed draws
    switch (s.id) {
        case LemmaId::bb2dd: {
            double B;
            if (s.r == 0) {
                B = draw_range(rng, 1.0, std::pow(2.0, 1.0 / s.l), bias_hint);
            } else {
                B = draw_range(rng, 1.0, reg.win_hi[0], bias_hint ? 1 : 0);
            }
            double lo_d = B;
            if (s.r > 0) lo_d = std::max(lo_d, std::pow(ipow(B, static_cast<int>(s.l)) / 2.0,
                                                        1.0 / s.r));
            double hi_d = std::max(reg.win_hi[1], 8.0 * lo_d);
            double D = draw_range(rng, lo_d, hi_d, bias_hint ? -1 : 0);
            x = {B, D};
            return true;
        }
        case LemmaId::aabb2dd: {
            double lo_a = s.k + s.l + s.p;
            double hi_a = reg.win_hi[0];
            if (s.k >= 2 && s.r == 0) return false;  // empty
            if (hi_a < lo_a) return false;
            int bias_a = s.k > 2 ? 1 : (s.k < 2 ? -1 : 0);
            double A = draw_range(rng, lo_a, hi_a, bias_hint ? bias_a : 0);
            double hi_b = std::min(A, reg.win_hi[1]);
            if (s.k == 1 && s.r == 0 && s.l > 0)
                hi_b = std::min(hi_b, std::pow(2.0, 1.0 / s.l));
            double B = draw_range(rng, 1.0, hi_b, bias_hint && s.l > 0 ? 1 : 0);
            double lo_d = B;
            if (s.k >= 2) lo_d = std::max(lo_d, A);
            if (s.r > 0)
                lo_d = std::max(lo_d, std::pow(ipow(A, s.k - 1) * ipow(B, static_cast<int>(s.l)) /
                                                   2.0,
                                               1.0 / s.r));
            double hi_d = std::max(reg.win_hi[2], 8.0 * lo_d);
            double D = draw_range(rng, lo_d, hi_d, bias_hint && s.r > 0 ? -1 : 0);
            x = {A, B, D};
            return true;
        }
        case LemmaId::aa11ddd: {
            double A = draw_range(rng, s.k + s.l, reg.win_hi[0], bias_hint ? 1 : 0);
            double lo_d = std::max(2.0 * A, std::pow(A, static_cast<double>(s.k) / s.c));
            double hi_d = std::max(reg.win_hi[1], 8.0 * lo_d);
            double D = draw_range(rng, lo_d, hi_d, bias_hint ? -1 : 0);
            x = {A, D};
            return true;
        }
        case LemmaId::aabbdd: {
            if (s.c == 0) return false;  // empty
            double A = draw_range(rng, s.k + s.l, reg.win_hi[0], bias_hint ? 1 : 0);
            double B = draw_range(rng, 1.0, A, bias_hint && s.l > 0 ? 1 : 0);
            double lo_d = std::max(
                2.0 * A,
                std::pow(ipow(A, s.k) * ipow(B, static_cast<int>(s.l)), 1.0 / s.c));
            double hi_d = std::max(reg.win_hi[2], 8.0 * lo_d);
            double D = draw_range(rng, lo_d, hi_d, bias_hint ? -1 : 0);
            x = {A, B, D};
            return true;
        }
        case LemmaId::main: {
            int N = s.N, c = s.c;
            x[0] = draw_range(rng, static_cast<double>(N), reg.win_hi[0], 0);
            double prod_a = x[0];
            for (int i = 1; i < N; ++i) {
                x[static_cast<size_t>(i)] =
                    draw_range(rng, 1.0, x[static_cast<size_t>(i - 1)], bias_hint ? -1 : 0);
                prod_a *= x[static_cast<size_t>(i)];
            }
            // D_c .. D_2 ascending floors keep the block descending
            double prod_tail = 1.0;
            for (int j = c - 1; j >= 1; --j) {
                double lo = std::max(x[static_cast<size_t>(j)],
                                     j + 1 < c ? x[static_cast<size_t>(N + j + 1)] : 1.0);
                x[static_cast<size_t>(N + j)] =
                    draw_range(rng, lo, reg.win_hi[static_cast<size_t>(N + j)],
                               bias_hint ? -1 : 0);
                prod_tail *= x[static_cast<size_t>(N + j)];
            }
            double lo_1 = std::max(2.0 * x[0], prod_a / prod_tail);
            if (c > 1) lo_1 = std::max(lo_1, x[static_cast<size_t>(N + 1)]);
            double hi_1 = std::max(reg.win_hi[static_cast<size_t>(N)], 2.0 * lo_1);
            x[static_cast<size_t>(N)] = draw_range(rng, lo_1, hi_1, bias_hint ? -1 : 0);
            return true;
        }
    }
    return false;
}

// --- coordinate ascent ------------------------------------------------

struct Interval {
    double lo, hi;
};

Interval coordinate_interval(const Region& reg, const std::vector<double>& x, int i) {
    double lo = reg.win_lo[static_cast<size_t>(i)];
    double hi = reg.win_hi[static_cast<size_t>(i)];
    for (const auto& lin : reg.linears) {
        double ci = lin.coeff[static_cast<size_t>(i)];
        if (ci == 0.0) continue;
        double rest = lin.rhs;
        for (int j = 0; j < reg.dim; ++j)
            if (j != i) rest -= lin.coeff[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        if (ci > 0)
            hi = std::min(hi, rest / ci);
        else
            lo = std::max(lo, rest / ci);
    }
    for (const auto& m : reg.monomials) {
        int el = m.lhs[static_cast<size_t>(i)];
        int er = m.rhs[static_cast<size_t>(i)];
        if (el > 0) {
            double rest = m.rhs_value(x);
            for (int j = 0; j < reg.dim; ++j)
                if (j != i) rest /= ipow(x[static_cast<size_t>(j)], m.lhs[static_cast<size_t>(j)]);
            if (rest > 0) hi = std::min(hi, std::pow(rest, 1.0 / el));
        } else if (er > 0) {
            double need = m.lhs_value(x) / m.scale;
            for (int j = 0; j < reg.dim; ++j)
                if (j != i) need /= ipow(x[static_cast<size_t>(j)], m.rhs[static_cast<size_t>(j)]);
            if (need > 0) lo = std::max(lo, std::pow(need, 1.0 / er));
        }
    }
    return {lo, hi};
}

void ascent_sweeps(const Region& reg, std::vector<double>& x, int max_sweeps) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double change = 0;
        for (int i = 0; i < reg.dim; ++i) {
            double wi = reg.w[static_cast<size_t>(i)];
            if (wi == 0.0) continue;
            Interval iv = coordinate_interval(reg, x, i);
            if (iv.hi < iv.lo) iv.hi = iv.lo;  // numerical guard
            double target = wi > 0 ? iv.hi : iv.lo;
            change = std::max(change,
                              std::abs(x[static_cast<size_t>(i)] - target) /
                                  std::max(1.0, std::abs(target)));
            x[static_cast<size_t>(i)] = target;
        }
        if (change < 1e-13) break;
    }
}

double climb(const Region& reg, std::vector<double>& x) {
    ascent_sweeps(reg, x, 400);
    // coordinates the objective ignores still steer the feasible set of the
    // others; scan a small grid over each and keep the best configuration
    for (int round = 0; round < 8; ++round) {
        bool improved = false;
        for (int i = 0; i < reg.dim; ++i) {
            if (reg.w[static_cast<size_t>(i)] != 0.0) continue;
            Interval iv = coordinate_interval(reg, x, i);
            if (iv.hi < iv.lo) continue;
            double best = reg.objective(x);
            std::vector<double> best_x = x;
            for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                std::vector<double> trial = x;
                trial[static_cast<size_t>(i)] = iv.lo + t * (iv.hi - iv.lo);
                ascent_sweeps(reg, trial, 200);
                double v = reg.objective(trial);
                if (v > best + 1e-12) {
                    best = v;
                    best_x = trial;
                    improved = true;
                }
            }
            x = best_x;
        }
        if (!improved) break;
    }
    return reg.objective(x);
}

// --- KKT residual ------------------------------------------------------

bool window_bound_terminus(const Region& reg, const std::vector<double>& x) {
    for (int i = 0; i < reg.dim; ++i) {
        if (reg.w[static_cast<size_t>(i)] == 0.0) continue;
        double hi = reg.win_hi[static_cast<size_t>(i)];
        if (std::abs(x[static_cast<size_t>(i)] - hi) <= 1e-7 * std::max(1.0, hi)) return true;
    }
    return false;
}

bool kkt_verified(const Region& reg, const std::vector<double>& x, const VerifyConfig& cfg) {
    std::vector<std::vector<double>> grads;
    for (const auto& lin : reg.linears) {
        double v = -lin.rhs;
        for (int j = 0; j < reg.dim; ++j)
            v += lin.coeff[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        if (std::abs(v) <= cfg.active_tol * std::max(1.0, std::abs(lin.rhs)))
            grads.push_back(lin.coeff);
    }
    for (const auto& m : reg.monomials) {
        double lhs = m.lhs_value(x), rhs = m.rhs_value(x);
        if (std::abs(lhs - rhs) <= cfg.active_tol * std::max({1.0, lhs, rhs})) {
            std::vector<double> g(static_cast<size_t>(reg.dim), 0.0);
            for (int j = 0; j < reg.dim; ++j) {
                if (m.lhs[static_cast<size_t>(j)] > 0)
                    g[static_cast<size_t>(j)] =
                        m.lhs[static_cast<size_t>(j)] * lhs / x[static_cast<size_t>(j)];
                else if (m.rhs[static_cast<size_t>(j)] > 0)
                    g[static_cast<size_t>(j)] =
                        -m.rhs[static_cast<size_t>(j)] * rhs / x[static_cast<size_t>(j)];
            }
            grads.push_back(std::move(g));
        }
    }
    // non-negative least squares by projected coordinate descent on
    // || grad L - sum lambda_i g_i ||
    std::vector<double> residual = reg.w;
    std::vector<double> lambda(grads.size(), 0.0);
    std::vector<double> norm2(grads.size(), 0.0);
    for (size_t a = 0; a < grads.size(); ++a)
        for (int j = 0; j < reg.dim; ++j)
            norm2[a] += grads[a][static_cast<size_t>(j)] * grads[a][static_cast<size_t>(j)];
    int iterations = 200 * static_cast<int>(grads.size() + 1);
    for (int it = 0; it < iterations; ++it) {
        double moved = 0;
        for (size_t a = 0; a < grads.size(); ++a) {
            if (norm2[a] == 0) continue;
            double dot = 0;
            for (int j = 0; j < reg.dim; ++j)
                dot += grads[a][static_cast<size_t>(j)] * residual[static_cast<size_t>(j)];
            double next = std::max(0.0, lambda[a] + dot / norm2[a]);
            double delta = next - lambda[a];
            if (delta == 0) continue;
            lambda[a] = next;
            for (int j = 0; j < reg.dim; ++j)
                residual[static_cast<size_t>(j)] -= delta * grads[a][static_cast<size_t>(j)];
            moved = std::max(moved, std::abs(delta) * std::sqrt(norm2[a]));
        }
        if (moved < 1e-14) break;
    }
    double scale = 0;
    for (double wi : reg.w) scale = std::max(scale, std::abs(wi));
    double worst = 0;
    for (int j = 0; j < reg.dim; ++j) worst = std::max(worst, std::abs(residual[static_cast<size_t>(j)]));
    return worst <= cfg.kkt_tol * std::max(1.0, scale);
}

// equality cases allowed by the lemma statements
bool on_exceptional_set(const LemmaRegionSpec& s, const std::vector<double>& x) {
    switch (s.id) {
        case LemmaId::bb2dd:
            return s.l == 1 && s.r == 0 && std::abs(x[0] - 2.0) <= 1e-6;
        case LemmaId::aabb2dd:
            return s.p > 0 && std::abs(x[0] - (s.p + 2.0)) <= 1e-6;
        case LemmaId::main:
            return true;  // non-strict statement
        case LemmaId::aa11ddd:
        case LemmaId::aabbdd:
            return false;  // strict statements admit no equality at all
    }
    return false;
}

bool strict_lemma(const LemmaRegionSpec& s) {
    return s.id == LemmaId::aa11ddd || s.id == LemmaId::aabbdd;
}

void record_point(const LemmaRegionSpec& spec, NonpositivityReport& report,
                  const std::vector<double>& x, double L, const VerifyConfig& cfg) {
    report.max_objective = std::max(report.max_objective, L);
    bool violation = L > cfg.violation_tol || (strict_lemma(spec) && L >= 0);
    if (violation) {
        ++report.violation_count;
        if (report.violations.size() < 16) report.violations.push_back({x, L});
        return;
    }
    if (std::abs(L) <= cfg.violation_tol) {
        ++report.equality_cases;
        if (!on_exceptional_set(spec, x)) ++report.equality_off_exceptional;
    }
}

}  // namespace

OmegaSample split_main_sample(const LemmaRegionSpec& spec, const RegionSample& sample) {
    if (spec.id != LemmaId::main)
        throw std::invalid_argument("split_main_sample: not a main-region spec");
    OmegaSample s;
    s.A.assign(sample.point.begin(), sample.point.begin() + spec.N);
    s.D.assign(sample.point.begin() + spec.N, sample.point.end());
    s.L = sample.objective;
    return s;
}

std::vector<RegionSample> sample_region(const LemmaRegionSpec& spec, std::uint64_t seed,
                                        long long count, const VerifyConfig& config) {
    spec.validate();
    Region reg = build_region(spec, config.window_scale);
    Rng rng(mix_seed(seed, spec.name()));
    std::vector<RegionSample> samples;
    samples.reserve(static_cast<size_t>(std::min<long long>(count, 1 << 20)));
    long long rejections = 0;
    std::vector<double> x;
    while (static_cast<long long>(samples.size()) < count) {
        if (!sample_point(spec, reg, rng, x)) {
            if (++rejections >= config.empty_region_rejections)
                throw std::runtime_error("sample_region: region appears to be empty: " +
                                         spec.name());
            continue;
        }
        samples.push_back({x, reg.objective(x)});
    }
    return samples;
}

NonpositivityReport verify_nonpositivity(const LemmaRegionSpec& spec, std::uint64_t seed,
                                         long long count, int starts,
                                         const VerifyConfig& config) {
    spec.validate();
    NonpositivityReport report;
    report.region = spec.name();
    if (spec.analytically_empty()) {
        report.region_empty = true;
        return report;
    }
    Region reg = build_region(spec, config.window_scale);
    Rng rng(mix_seed(seed, spec.name()));
    std::vector<double> x;
    long long rejections = 0;
    for (long long i = 0; i < count; ++i) {
        if (!sample_point(spec, reg, rng, x)) {
            if (++rejections >= config.empty_region_rejections) {
                report.region_empty = true;
                return report;
            }
            --i;
            continue;
        }
        ++report.samples;
        record_point(spec, report, x, reg.objective(x), config);
    }
    for (int s = 0; s < starts; ++s) {
        if (!sample_point(spec, reg, rng, x)) continue;
        double L = climb(reg, x);
        ++report.climbs;
        report.max_climb_objective = std::max(report.max_climb_objective, L);
        record_point(spec, report, x, L, config);
        if (window_bound_terminus(reg, x))
            ++report.window_bound;
        else if (kkt_verified(reg, x, config))
            ++report.kkt_verified;
        else
            ++report.kkt_failed;
    }
    report.max_objective = std::max(report.max_objective, report.max_climb_objective);
    return report;
}

}  // namespace wfano::appendix
