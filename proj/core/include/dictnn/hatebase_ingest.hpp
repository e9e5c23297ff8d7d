#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace dictnn {

// What to do with entries whose exported offensiveness is null.
enum class NullScorePolicy {
    Midpoint,  // substitute 50
    Drop,      // skip the entry
};

struct IngestStats {
    std::size_t rows_written = 0;
    std::size_t rows_skipped = 0;  // missing `term` field, or dropped nulls
    std::size_t null_scores = 0;
};

// Converts exported lexicon API result pages into the dictionary CSV format.
// Each page is a JSON document with a `result` array of objects carrying
// `term`, `average_offensiveness` and `is_unambiguous`. Terms are lowercased;
// a null offensiveness is replaced by 50 unless the policy says drop.
// An unparseable page throws with its zero-based page index.
IngestStats ingest_hatebase_json(const std::vector<std::string>& pages,
                                 std::ostream& csv_out,
                                 NullScorePolicy policy = NullScorePolicy::Midpoint);

}  // namespace dictnn
