#include "wfano/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "wfano/hodge.hpp"
#include "wfano/invariants.hpp"

namespace wfano {

namespace {

// Largest a with a^(m-k+1) <= 2^m; the per-position weight cap in Fano mode.
i64 fano_position_cap(int m, int k) {
    i64 a = 1;
    while (checked_pow(a + 1, m - k + 1) <= checked_pow(2, m)) ++a;
    return a;
}

struct SearchSpace {
    int dim;
    Mode mode;
    int c;
    int n;                      // n = dim + c
    std::vector<i64> weight_cap;  // per position 0..n
    i64 degree_cap;
};

SearchSpace make_space(int dim, Mode mode, int c) {
    SearchSpace s;
    s.dim = dim;
    s.mode = mode;
    s.c = c;
    s.n = dim + c;
    s.weight_cap.assign(static_cast<size_t>(s.n) + 1, 0);
    if (mode == Mode::fano) {
        s.weight_cap[0] = s.weight_cap[1] = 1;  // a_0 = a_1 = 1 for Fano
        for (int k = 2; k <= s.n; ++k) {
            i64 cap = s.n;
            if (k <= dim) cap = std::min<i64>(cap, fano_position_cap(dim, k));
            s.weight_cap[static_cast<size_t>(k)] = cap;
        }
        s.degree_cap = checked_mul(static_cast<i64>(s.n), static_cast<i64>(s.n) + 1);
    } else {
        for (int k = 0; k <= s.n; ++k) s.weight_cap[static_cast<size_t>(k)] = s.n + 1;
        s.degree_cap = checked_mul(static_cast<i64>(s.n) + 1, static_cast<i64>(s.n) + 1);
    }
    return s;
}

void extend_weights(const SearchSpace& s, std::vector<i64>& weights,
                    std::vector<std::vector<i64>>& out) {
    size_t pos = weights.size();
    if (pos == static_cast<size_t>(s.n) + 1) {
        out.push_back(weights);
        return;
    }
    i64 lo = pos == 0 ? 1 : weights.back();
    for (i64 a = lo; a <= s.weight_cap[pos]; ++a) {
        weights.push_back(a);
        extend_weights(s, weights, out);
        weights.pop_back();
    }
}

// Lower bound for degree position j (1-based): ordering, d_j > a_{n-c+j} for
// j < c, and d_c >= 2 a_n.
i64 degree_floor(const SearchSpace& s, const std::vector<i64>& a, const std::vector<i64>& d,
                 int j) {
    i64 lo = d.empty() ? 2 : std::max<i64>(2, d.back());
    if (j < s.c) lo = std::max(lo, a[static_cast<size_t>(s.n - s.c + j)] + 1);
    if (j == s.c) lo = std::max(lo, 2 * a.back());
    return lo;
}

void extend_degrees(const SearchSpace& s, const std::vector<i64>& weights, i64 weight_sum,
                    std::vector<i64>& degrees, i64 degree_sum,
                    std::vector<CandidateData>& out) {
    int j = static_cast<int>(degrees.size()) + 1;
    if (j > s.c) {
        CandidateData cand{WeightSystem{weights}, Multidegree{degrees}};
        if (run_all_filters(cand, s.mode).verdict) out.push_back(std::move(cand));
        return;
    }
    i64 lo = degree_floor(s, weights, degrees, j);
    // remaining degrees are each at least the current one; budget the sum
    i64 budget = s.mode == Mode::fano ? weight_sum - 1 : weight_sum;
    for (i64 d = lo; d <= s.degree_cap; ++d) {
        i64 min_total = degree_sum + d * (s.c - j + 1);
        if (min_total > budget) break;
        if (std::binary_search(weights.begin(), weights.end(), d)) continue;  // linear cone
        if (j == s.c && s.mode == Mode::calabi_yau && degree_sum + d != weight_sum) continue;
        degrees.push_back(d);
        extend_degrees(s, weights, weight_sum, degrees, degree_sum + d, out);
        degrees.pop_back();
    }
}

std::vector<CandidateData> candidates_for_weights(const SearchSpace& s,
                                                  const std::vector<i64>& weights) {
    std::vector<CandidateData> out;
    i64 weight_sum = 0;
    for (i64 a : weights) weight_sum = checked_add(weight_sum, a);
    // cheapest viability cut before the degree search
    i64 min_degree_sum = 0;
    {
        std::vector<i64> d;
        for (int j = 1; j <= s.c; ++j) {
            i64 lo = degree_floor(s, weights, d, j);
            d.push_back(lo);
            min_degree_sum += lo;
        }
    }
    if (s.mode == Mode::fano ? min_degree_sum >= weight_sum : min_degree_sum > weight_sum)
        return out;
    std::vector<i64> degrees;
    extend_degrees(s, weights, weight_sum, degrees, 0, out);
    return out;
}

}  // namespace

std::vector<CandidateData> enumerate_candidates(int dim, Mode mode, int jobs) {
    if (dim < 3) throw std::invalid_argument("enumerate: dimension must be at least 3");
    if (jobs < 1) jobs = 1;

    // weight tuples first (cheap), then the degree search fans out per tuple
    std::vector<std::pair<SearchSpace, std::vector<i64>>> tasks;
    int max_c = mode == Mode::fano ? dim : dim + 1;
    for (int c = 1; c <= max_c; ++c) {
        SearchSpace s = make_space(dim, mode, c);
        std::vector<std::vector<i64>> tuples;
        std::vector<i64> prefix;
        extend_weights(s, prefix, tuples);
        for (auto& w : tuples) tasks.emplace_back(s, std::move(w));
    }

    std::vector<std::vector<CandidateData>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            results[i] = candidates_for_weights(tasks[i].first, tasks[i].second);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<CandidateData> all;
    for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

FamilyRecord make_record(const CandidateData& cand, Mode mode, const ReferenceTable* table) {
    FamilyRecord rec;
    rec.candidate = cand;
    rec.index = index_of(cand);
    rec.degree = rec.index > 0 ? anticanonical_degree(cand) : Rational(0);
    rec.h0 = h0_anticanonical(cand);
    rec.hodge_middle = middle_hodge(cand);
    if (mode == Mode::fano && !rec.degree.is_integer())
        throw std::runtime_error("classify: anticanonical degree is not an integer for " +
                                 std::to_string(rec.index));
    if (table) {
        for (const auto& row : table->rows) {
            if (row.weights != cand.space.weights || row.degrees != cand.multidegree.degrees)
                continue;
            bool ok = row.index == rec.index && Rational(row.deg) == rec.degree &&
                      row.h0 == rec.h0;
            for (const auto& [key, value] : row.hodge) {
                auto [p, q] = parse_hodge_key(key);
                ok = ok && p + q == cand.dim() &&
                     rec.hodge_middle[static_cast<size_t>(q)] == value;
            }
            if (!ok)
                throw std::runtime_error(
                    "classify: computed invariants disagree with reference row " +
                    std::to_string(row.no) + " (engine bug or bad table)");
            rec.confirmed = true;
            rec.reference_no = row.no;
            break;
        }
    }
    return rec;
}

}  // namespace

std::vector<FamilyRecord> classify(int dim, Mode mode, const ReferenceTable* table, int jobs) {
    std::vector<CandidateData> candidates = enumerate_candidates(dim, mode, jobs);
    std::vector<FamilyRecord> records(candidates.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
            if (failed.load()) return;
            try {
                records[i] = make_record(candidates[i], mode, table);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed = true;
                error = e.what();
                return;
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error(error);

    std::sort(records.begin(), records.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
        if (a.index != b.index) return a.index < b.index;
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.h0 != b.h0) return a.h0 < b.h0;
        return a.candidate < b.candidate;
    });
    return records;
}

DiffReport diff_reference(const std::vector<FamilyRecord>& records,
                          const ReferenceTable& table) {
    DiffReport report;
    std::vector<bool> used(records.size(), false);
    for (const auto& row : table.rows) {
        bool found = false;
        for (size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            if (used[i] || rec.candidate.space.weights != row.weights ||
                rec.candidate.multidegree.degrees != row.degrees)
                continue;
            bool ok = rec.index == row.index && rec.degree == Rational(row.deg) &&
                      rec.h0 == row.h0;
            for (const auto& [key, value] : row.hodge) {
                auto [p, q] = parse_hodge_key(key);
                ok = ok && p + q == rec.candidate.dim() &&
                     rec.hodge_middle[static_cast<size_t>(q)] == value;
            }
            if (ok) {
                report.matched.emplace_back(row.no, i);
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) report.missing.push_back(row.no);
    }
    for (size_t i = 0; i < records.size(); ++i)
        if (!used[i]) report.extra.push_back(i);
    return report;
}

}  // namespace wfano
