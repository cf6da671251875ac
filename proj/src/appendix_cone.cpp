#include <sstream>

#include "appendix_internal.hpp"

namespace wfano::appendix {

using detail::mix_seed;
using detail::Rng;

namespace {

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string describe_instance(double lambda, const std::vector<double>& multipliers,
                              const std::vector<double>& u) {
    std::ostringstream out;
    out << "lambda=" << lambda << " multipliers=[";
    for (size_t i = 0; i < multipliers.size(); ++i) out << (i ? "," : "") << multipliers[i];
    out << "] u=[";
    for (size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u[i];
    out << "]";
    return out.str();
}

// ----- go_up: 0 <= u^(1) <= ... <= u^(m), generators -e_1, e_1,
// -e_i + e_{i+1}, -e_m; identity lambda u + sum = (1,...,1).

struct GoUpInstance {
    double lambda = 0;
    std::vector<double> lam;  // lam[i+1] <-> lambda_i, i = -1..m
    std::vector<double> u;    // u[1..m]
    int m = 0;

    bool in_lambda(int i) const { return lam[static_cast<size_t>(i + 1)] > 0; }
};

bool generate_go_up(Rng& rng, int m, GoUpInstance& inst) {
    inst.m = m;
    inst.lam.assign(static_cast<size_t>(m) + 2, 0.0);
    inst.u.assign(static_cast<size_t>(m) + 1, 0.0);
    if (rng.coin(0.25)) {
        // lambda = 0 branch: the identity forces lambda_{i} = 1 + lambda_{i+1}
        // down the chain, so {0..m-1} lies in Lambda; u is unconstrained.
        inst.lambda = 0;
        double lam_m = rng.coin() ? rng.uniform(0.05, 1.0) : 0.0;
        inst.lam[static_cast<size_t>(m + 1)] = lam_m;
        for (int i = m - 1; i >= 1; --i)
            inst.lam[static_cast<size_t>(i + 1)] = 1.0 + inst.lam[static_cast<size_t>(i + 2)];
        double lam_neg = rng.coin() ? rng.uniform(0.05, 1.0) : 0.0;
        inst.lam[0] = lam_neg;
        inst.lam[1] = 1.0 + lam_neg + inst.lam[2];  // lambda_0
        double base = rng.uniform(0.0, 1.5);
        for (int i = 1; i <= m; ++i) {
            inst.u[static_cast<size_t>(i)] = base;
            if (rng.coin(0.5)) base += rng.uniform(0.0, 1.0);
        }
        return true;
    }
    inst.lambda = rng.uniform(0.2, 2.5);
    double theta = rng.uniform(0.1, 0.5);
    if (rng.coin(0.15)) theta = rng.uniform(0.5, 0.9);
    for (int i = -1; i <= m; ++i)
        if (rng.coin(theta)) inst.lam[static_cast<size_t>(i + 1)] = rng.uniform(0.05, 1.2);
    auto L = [&](int i) { return inst.lam[static_cast<size_t>(i + 1)]; };
    inst.u[1] = (1.0 + L(-1) - L(0) + L(1)) / inst.lambda;
    for (int i = 2; i <= m; ++i)
        inst.u[static_cast<size_t>(i)] = (1.0 - L(i - 1) + L(i)) / inst.lambda;
    if (inst.u[1] < 0) return false;
    for (int i = 1; i < m; ++i)
        if (inst.u[static_cast<size_t>(i)] > inst.u[static_cast<size_t>(i + 1)]) return false;
    return true;
}

bool go_up_conclusion(const GoUpInstance& inst) {
    int m = inst.m;
    // prefix_ok[p]: {0..p-1} in Lambda;  suffix_ok[q]: {q+1..m} in Lambda
    std::vector<bool> prefix_ok(static_cast<size_t>(m) + 2), suffix_ok(static_cast<size_t>(m) + 2);
    prefix_ok[0] = true;
    for (int p = 1; p <= m + 1; ++p)
        prefix_ok[static_cast<size_t>(p)] =
            prefix_ok[static_cast<size_t>(p - 1)] && inst.in_lambda(p - 1);
    suffix_ok[static_cast<size_t>(m)] = true;
    for (int q = m - 1; q >= 0; --q)
        suffix_ok[static_cast<size_t>(q)] =
            suffix_ok[static_cast<size_t>(q + 1)] && inst.in_lambda(q + 1);
    for (int p = 0; p <= m; ++p) {
        if (!prefix_ok[static_cast<size_t>(p)]) break;
        bool run = true;
        for (int q = p; q <= m; ++q) {
            if (q >= p + 2)
                run = run && nearly_equal(inst.u[static_cast<size_t>(q - 1)],
                                          inst.u[static_cast<size_t>(q)]);
            if (run && suffix_ok[static_cast<size_t>(q)]) return true;
            if (!run) break;
        }
    }
    return false;
}

// ----- go_down: 0 >= u^(1) >= ... >= u^(m), generators -e_1 and
// -e_i + e_{i+1}; identity lambda u + sum = (-1,...,-1). lambda = 0 is
// impossible (the last coordinate would force a negative multiplier).

struct GoDownInstance {
    double lambda = 0;
    std::vector<double> lam;  // lam[i] <-> lambda_i, i = 0..m-1
    std::vector<double> u;
    int m = 0;

    bool in_lambda(int i) const { return lam[static_cast<size_t>(i)] > 0; }
};

bool generate_go_down(Rng& rng, int m, GoDownInstance& inst) {
    inst.m = m;
    inst.lam.assign(static_cast<size_t>(m), 0.0);
    inst.u.assign(static_cast<size_t>(m) + 1, 0.0);
    inst.lambda = rng.uniform(0.2, 2.5);
    double theta = rng.uniform(0.1, 0.5);
    if (rng.coin(0.15)) theta = rng.uniform(0.5, 0.9);
    if (!rng.coin(0.2)) {  // with probability 0.2 keep Lambda empty (constant u)
        for (int i = 0; i < m; ++i)
            if (rng.coin(theta)) inst.lam[static_cast<size_t>(i)] = rng.uniform(0.05, 1.2);
    }
    auto L = [&](int i) { return inst.lam[static_cast<size_t>(i)]; };
    inst.u[1] = (-1.0 + L(0) + L(1)) / inst.lambda;
    for (int i = 2; i <= m - 1; ++i)
        inst.u[static_cast<size_t>(i)] = (-1.0 - L(i - 1) + L(i)) / inst.lambda;
    inst.u[static_cast<size_t>(m)] = (-1.0 - L(m - 1)) / inst.lambda;
    if (inst.u[1] > 0) return false;
    for (int i = 1; i < m; ++i)
        if (inst.u[static_cast<size_t>(i)] < inst.u[static_cast<size_t>(i + 1)]) return false;
    return true;
}

bool go_down_conclusion(const GoDownInstance& inst) {
    int m = inst.m;
    auto all_equal = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            if (!nearly_equal(inst.u[static_cast<size_t>(i)], inst.u[static_cast<size_t>(i + 1)]))
                return false;
        return true;
    };
    if (inst.in_lambda(0) && all_equal(2, m)) return true;  // (i)
    if (all_equal(1, m)) return true;                       // (ii)
    bool case3 = true;
    for (int i = 1; i <= m - 1; ++i) case3 = case3 && inst.in_lambda(i);
    if (case3) return true;  // (iii)
    bool case4 = inst.in_lambda(0);
    for (int i = 2; i <= m - 1; ++i) case4 = case4 && inst.in_lambda(i);
    return case4;  // (iv)
}

// ----- go_up_down: ascending non-negative block of length N, descending
// non-positive block of length c; u_0 = 2 e_1 - e_{N+1}.

struct GoUpDownInstance {
    double lambda = 0;
    std::vector<double> lam;  // lam[i+1] <-> lambda_i, i = -1..N+c-1
    std::vector<double> u;    // u[1..N+c]
    int N = 0, c = 0;

    bool in_lambda(int i) const { return lam[static_cast<size_t>(i + 1)] > 0; }
    bool in_lambda2(int i) const {  // Lambda'' membership, 1 <= i <= N+c-1
        return nearly_equal(u[static_cast<size_t>(i)], u[static_cast<size_t>(i + 1)]);
    }
};

bool generate_go_up_down(Rng& rng, int N, int c, GoUpDownInstance& inst) {
    inst.N = N;
    inst.c = c;
    int top = N + c - 1;
    inst.lam.assign(static_cast<size_t>(top) + 2, 0.0);
    inst.u.assign(static_cast<size_t>(N + c) + 1, 0.0);
    inst.lambda = rng.uniform(0.2, 2.5);
    double theta = rng.uniform(0.1, 0.4);
    if (rng.coin(0.15)) theta = rng.uniform(0.4, 0.8);
    for (int i = -1; i <= top; ++i)
        if (rng.coin(theta)) inst.lam[static_cast<size_t>(i + 1)] = rng.uniform(0.05, 1.0);
    auto L = [&](int i) { return inst.lam[static_cast<size_t>(i + 1)]; };
    inst.u[1] = (1.0 + L(-1) - 2.0 * L(0) + L(1)) / inst.lambda;
    for (int i = 2; i <= N - 1; ++i)
        inst.u[static_cast<size_t>(i)] = (1.0 - L(i - 1) + L(i)) / inst.lambda;
    if (N >= 2) inst.u[static_cast<size_t>(N)] = (1.0 - L(N - 1) + L(N)) / inst.lambda;
    if (c == 1) {
        inst.u[static_cast<size_t>(N + 1)] = (-1.0 + L(0)) / inst.lambda;
    } else {
        inst.u[static_cast<size_t>(N + 1)] = (-1.0 + L(0) + L(N + 1)) / inst.lambda;
        for (int j = 2; j <= c - 1; ++j)
            inst.u[static_cast<size_t>(N + j)] =
                (-1.0 - L(N + j - 1) + L(N + j)) / inst.lambda;
        inst.u[static_cast<size_t>(N + c)] = (-1.0 - L(N + c - 1)) / inst.lambda;
    }
    if (inst.u[1] < 0) return false;
    for (int i = 1; i < N; ++i)
        if (inst.u[static_cast<size_t>(i)] > inst.u[static_cast<size_t>(i + 1)]) return false;
    if (inst.u[static_cast<size_t>(N + 1)] > 0) return false;
    for (int j = 1; j < c; ++j)
        if (inst.u[static_cast<size_t>(N + j)] < inst.u[static_cast<size_t>(N + j + 1)])
            return false;
    return true;
}

bool go_up_down_conclusion(const GoUpDownInstance& inst) {
    int N = inst.N, c = inst.c;
    auto covered = [&](int i) { return inst.in_lambda(i) || inst.in_lambda2(i); };
    auto range_covered = [&](int from, int to) {
        for (int i = from; i <= to; ++i)
            if (!covered(i)) return false;
        return true;
    };
    // (I): some 0 <= q <= N with {1..q-1} and {q+1..N+c-1} covered, N in Lambda'
    if (inst.in_lambda(N)) {
        for (int q = 0; q <= N; ++q)
            if (range_covered(1, q - 1) && range_covered(q + 1, N + c - 1)) return true;
    }
    // (II): some 1 <= p <= N with {0..p-1}, {p+1..N-1}, {N+2..N+c-1} covered, 0 in Lambda'
    if (inst.in_lambda(0)) {
        for (int p = 1; p <= N; ++p)
            if (range_covered(0, p - 1) && range_covered(p + 1, N - 1) &&
                range_covered(N + 2, N + c - 1))
                return true;
    }
    // (III): some 1 <= p <= q <= N-1 with the four stretches covered, {0,N} in Lambda'
    if (inst.in_lambda(0) && inst.in_lambda(N)) {
        for (int p = 1; p <= N - 1; ++p)
            for (int q = p; q <= N - 1; ++q)
                if (range_covered(0, p - 1) && range_covered(p + 1, q - 1) &&
                    range_covered(q + 1, N) && range_covered(N + 2, N + c - 1))
                    return true;
    }
    return false;
}

std::string cone_region_name(ConeLemma lemma, int m_or_N, int c) {
    switch (lemma) {
        case ConeLemma::go_up: return "go_up(m=" + std::to_string(m_or_N) + ")";
        case ConeLemma::go_down: return "go_down(m=" + std::to_string(m_or_N) + ")";
        case ConeLemma::go_up_down:
            return "go_up_down(N=" + std::to_string(m_or_N) + ",c=" + std::to_string(c) + ")";
    }
    return "?";
}

}  // namespace

ConeReport verify_cone_lemma(ConeLemma lemma, int m_or_N, int c, std::uint64_t seed,
                             long long kept_target) {
    if (m_or_N < 2) throw std::invalid_argument("verify_cone_lemma: dimension must be >= 2");
    if (lemma == ConeLemma::go_up_down && c < 1)
        throw std::invalid_argument("verify_cone_lemma: go_up_down needs c >= 1");
    ConeReport report;
    report.region = cone_region_name(lemma, m_or_N, c);
    Rng rng(mix_seed(seed, report.region));
    long long cap = std::max<long long>(1000 * kept_target, 1'000'000);
    GoUpInstance up;
    GoDownInstance down;
    GoUpDownInstance updown;
    while (report.kept < kept_target && report.attempts < cap) {
        ++report.attempts;
        bool kept = false, holds = true;
        std::string witness;
        switch (lemma) {
            case ConeLemma::go_up:
                if (generate_go_up(rng, m_or_N, up)) {
                    kept = true;
                    holds = go_up_conclusion(up);
                    if (!holds) witness = describe_instance(up.lambda, up.lam, up.u);
                }
                break;
            case ConeLemma::go_down:
                if (generate_go_down(rng, m_or_N, down)) {
                    kept = true;
                    holds = go_down_conclusion(down);
                    if (!holds) witness = describe_instance(down.lambda, down.lam, down.u);
                }
                break;
            case ConeLemma::go_up_down:
                if (generate_go_up_down(rng, m_or_N, c, updown)) {
                    kept = true;
                    holds = go_up_down_conclusion(updown);
                    if (!holds) witness = describe_instance(updown.lambda, updown.lam, updown.u);
                }
                break;
        }
        if (!kept) continue;
        ++report.kept;
        if (!holds) {
            ++report.counterexamples;
            if (report.first_counterexample.empty()) report.first_counterexample = witness;
        }
    }
    report.sampling_warning = report.kept < 100;
    return report;
}

}  // namespace wfano::appendix
