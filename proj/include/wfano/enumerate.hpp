#pragma once

#include <optional>

#include "wfano/core.hpp"
#include "wfano/filters.hpp"
#include "wfano/reference.hpp"

namespace wfano {

/// One classified deformation family.
struct FamilyRecord {
    CandidateData candidate;
    i64 index = 0;
    Rational degree;                 // anticanonical self-intersection; 0 in Calabi-Yau mode
    i64 h0 = 0;                      // dim H^0(-K)
    std::vector<i64> hodge_middle;   // (h^{m,0}, ..., h^{0,m})
    bool confirmed = false;
    std::optional<int> reference_no;
};

/// The complete, duplicate-free, canonically ordered list of normalized
/// candidates of the given dimension passing every filter. dim >= 3.
/// Output is independent of the worker count.
std::vector<CandidateData> enumerate_candidates(int dim, Mode mode, int jobs = 1);

/// One record per enumerated candidate with all invariants computed, sorted
/// the way the classification tables are laid out (index ascending, then
/// degree, h0, candidate). A candidate matching a reference row with any
/// disagreeing invariant is a hard error (engine bug), not an unconfirmed
/// record.
std::vector<FamilyRecord> classify(int dim, Mode mode, const ReferenceTable* table,
                                   int jobs = 1);

struct DiffReport {
    std::vector<std::pair<int, size_t>> matched;  // (reference no, record position)
    std::vector<int> missing;                     // reference row numbers with no record
    std::vector<size_t> extra;                    // positions of unconfirmed records
};

DiffReport diff_reference(const std::vector<FamilyRecord>& records,
                          const ReferenceTable& table);

}  // namespace wfano
