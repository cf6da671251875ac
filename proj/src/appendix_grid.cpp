#include <atomic>
#include <functional>
#include <thread>

#include "appendix_internal.hpp"

namespace wfano::appendix {

bool GridOutcome::ok() const {
    for (const auto& r : regions)
        if (!r.region_empty && !r.ok()) return false;
    for (const auto& r : cones)
        if (!r.ok()) return false;
    return true;
}

namespace {

std::vector<LemmaRegionSpec> grid_specs(int max_n) {
    std::vector<LemmaRegionSpec> specs;
    for (int N = 3; N <= max_n; ++N)
        for (int c = 1; c <= std::min(5, (N - 1) / 2); ++c)
            specs.push_back({LemmaId::main, 0, 0, 0, 0, c, N});
    for (int l = 1; l <= 6; ++l)
        for (int r = 0; r <= 6; ++r)
            specs.push_back({LemmaId::bb2dd, 0, static_cast<double>(l), 0, r, 0, 0});
    for (int k = 1; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l)
            for (double p : {0.0, 0.5, 1.0, 2.0})
                for (int r = 0; r <= 6; ++r) {
                    if (k + l + p <= 2) continue;
                    specs.push_back({LemmaId::aabb2dd, k, static_cast<double>(l), p, r, 0, 0});
                }
    for (int k = 1; k <= 6; ++k)
        for (int c = 1; c <= 5; ++c)
            for (double l : {0.0, 0.5, 1.0, 2.0}) {
                if (k + l <= 2) continue;
                specs.push_back({LemmaId::aa11ddd, k, l, 0, 0, c, 0});
            }
    for (int k = 1; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l)
            for (int c = 0; c <= 5; ++c) {
                if (k + l <= 2) continue;
                specs.push_back({LemmaId::aabbdd, k, static_cast<double>(l), 0, 0, c, 0});
            }
    return specs;
}

void run_tasks(size_t count, int jobs, const std::function<void(size_t)>& task) {
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
    };
    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

GridOutcome run_full_grid(std::uint64_t seed, long long samples_per_region,
                          int starts_per_region, long long kept_per_cone, int jobs,
                          const VerifyConfig& config) {
    GridOutcome outcome;
    std::vector<LemmaRegionSpec> specs = grid_specs(12);

    // each region gets a base pass plus a shorter doubled-window pass
    outcome.regions.assign(2 * specs.size(), {});
    run_tasks(specs.size(), jobs, [&](size_t i) {
        outcome.regions[2 * i] = verify_nonpositivity(specs[i], seed, samples_per_region,
                                                      starts_per_region, config);
        VerifyConfig wide = config;
        wide.window_scale = 2.0 * config.window_scale;
        outcome.regions[2 * i + 1] =
            verify_nonpositivity(specs[i], seed + 1, std::max<long long>(samples_per_region / 10, 1),
                                 std::max(starts_per_region / 4, 2), wide);
        outcome.regions[2 * i + 1].region += " [window x2]";
    });
    for (const auto& r : outcome.regions)
        if (r.region_empty) ++outcome.empty_regions;
    outcome.empty_regions /= 2;  // base and wide passes agree on emptiness

    struct ConeTask {
        ConeLemma lemma;
        int m, c;
        long long target;
    };
    std::vector<ConeTask> cone_tasks;
    {
        long long per = kept_per_cone / 11 + 1;
        for (int m = 2; m <= 12; ++m) cone_tasks.push_back({ConeLemma::go_up, m, 0, per});
        for (int m = 2; m <= 12; ++m) cone_tasks.push_back({ConeLemma::go_down, m, 0, per});
        long long per_ud = kept_per_cone / 55 + 1;
        for (int N = 2; N <= 12; ++N)
            for (int c = 1; c <= 5; ++c)
                cone_tasks.push_back({ConeLemma::go_up_down, N, c, per_ud});
    }
    outcome.cones.assign(cone_tasks.size(), {});
    run_tasks(cone_tasks.size(), jobs, [&](size_t i) {
        const auto& t = cone_tasks[i];
        outcome.cones[i] = verify_cone_lemma(t.lemma, t.m, t.c, seed, t.target);
    });
    return outcome;
}

}  // namespace wfano::appendix
