#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace wfano::appendix {

enum class LemmaId { bb2dd, aabb2dd, aa11ddd, aabbdd, main };

/// Region parameters; which fields matter depends on the lemma:
///   bb2dd:   l >= 1 (int), r >= 0 (int)
///   aabb2dd: k >= 1 (int), l >= 0 (int), p >= 0 (real), r >= 0 (int),
///            with k + l + p > 2
///   aa11ddd: k >= 1 (int), c >= 1 (int), l >= 0 (real), with k + l > 2
///   aabbdd:  k >= 1 (int), l >= 0 (int), c >= 0 (int), with k + l > 2
///   main:    N >= 3, c >= 1, N >= 2c + 1
struct LemmaRegionSpec {
    LemmaId id = LemmaId::main;
    int k = 0;
    double l = 0;
    double p = 0;
    int r = 0;
    int c = 0;
    int N = 0;

    void validate() const;             // throws std::invalid_argument on bad hypotheses
    bool analytically_empty() const;   // the window-independent empty cases
    std::string name() const;
    int dimension() const;
};

struct VerifyConfig {
    double feasibility_tol = 1e-12;
    double violation_tol = 1e-9;
    double kkt_tol = 1e-6;
    double active_tol = 1e-7;
    double window_scale = 1.0;
    long long empty_region_rejections = 1'000'000;
};

struct RegionSample {
    std::vector<double> point;
    double objective = 0;
};

/// One feasible point of the main region, split into its two blocks.
struct OmegaSample {
    std::vector<double> A;
    std::vector<double> D;
    double L = 0;
};

OmegaSample split_main_sample(const LemmaRegionSpec& spec, const RegionSample& sample);

/// Draws `count` feasible points (deterministic given seed). Throws
/// std::runtime_error if the region looks empty after the configured number
/// of consecutive rejections.
std::vector<RegionSample> sample_region(const LemmaRegionSpec& spec, std::uint64_t seed,
                                        long long count, const VerifyConfig& config = {});

struct NonpositivityReport {
    std::string region;
    bool region_empty = false;
    long long samples = 0;
    double max_objective = -std::numeric_limits<double>::infinity();
    std::vector<RegionSample> violations;       // objective above tolerance (capped list)
    long long violation_count = 0;
    long long equality_cases = 0;               // |L| within tolerance
    long long equality_off_exceptional = 0;     // equality not on the lemma's stated set
    int climbs = 0;
    double max_climb_objective = -std::numeric_limits<double>::infinity();
    int kkt_verified = 0;
    int window_bound = 0;
    int kkt_failed = 0;

    bool ok() const {
        return violation_count == 0 && equality_off_exceptional == 0 && kkt_failed == 0;
    }
};

/// Evaluates the objective on `count` sampled points plus `starts` hill
/// climbs; reports the maximum found, violations, equality cases and the
/// KKT classification of every climb terminus.
NonpositivityReport verify_nonpositivity(const LemmaRegionSpec& spec, std::uint64_t seed,
                                         long long count, int starts,
                                         const VerifyConfig& config = {});

enum class ConeLemma { go_up, go_down, go_up_down };

struct ConeReport {
    std::string region;
    long long attempts = 0;
    long long kept = 0;
    long long counterexamples = 0;
    std::string first_counterexample;
    bool sampling_warning = false;  // fewer than 100 kept instances

    bool ok() const { return counterexamples == 0; }
};

/// Reverse-generates instances of the cone decomposition lemmas: draws the
/// multipliers, solves the defining identity for the vector u, keeps the
/// instances whose monotonicity/sign premises hold, and checks the stated
/// conclusion on every kept instance. For go_up and go_down, m is the
/// dimension and c is ignored.
ConeReport verify_cone_lemma(ConeLemma lemma, int m_or_N, int c, std::uint64_t seed,
                             long long kept_target);

/// The full verification grid: the main proposition over N <= max_N with
/// c <= min(5, (N-1)/2), all four auxiliary lemma grids (k,l,r <= 6,
/// p in {0, 0.5, 1, 2}), and the three cone lemmas. Regions whose windows
/// are provably empty are skipped and counted.
struct GridOutcome {
    std::vector<NonpositivityReport> regions;
    std::vector<ConeReport> cones;
    long long empty_regions = 0;
    bool ok() const;
};

GridOutcome run_full_grid(std::uint64_t seed, long long samples_per_region,
                          int starts_per_region, long long kept_per_cone, int jobs,
                          const VerifyConfig& config = {});

}  // namespace wfano::appendix
