#include "dictnn/hatebase_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "dictnn/csv.hpp"

namespace dictnn {

IngestStats ingest_hatebase_json(const std::vector<std::string>& pages,
                                 std::ostream& csv_out,
                                 NullScorePolicy policy) {
    IngestStats stats;
    csv_out << "term,offensiveness,unambiguous\n";

    for (std::size_t page_index = 0; page_index < pages.size(); ++page_index) {
        nlohmann::json page;
        try {
            page = nlohmann::json::parse(pages[page_index]);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("hatebase page " + std::to_string(page_index) +
                                     ": unparseable JSON (" + e.what() + ")");
        }
        if (!page.contains("result") || !page["result"].is_array()) {
            throw std::runtime_error("hatebase page " + std::to_string(page_index) +
                                     ": missing `result` array");
        }

        for (const auto& item : page["result"]) {
            if (!item.contains("term") || !item["term"].is_string()) {
                ++stats.rows_skipped;
                continue;
            }
            std::string term = item["term"].get<std::string>();
            std::transform(term.begin(), term.end(), term.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

            int offensiveness = 50;
            const auto& raw = item.contains("average_offensiveness")
                                  ? item["average_offensiveness"]
                                  : nlohmann::json(nullptr);
            if (raw.is_null()) {
                ++stats.null_scores;
                if (policy == NullScorePolicy::Drop) {
                    ++stats.rows_skipped;
                    continue;
                }
            } else if (raw.is_number()) {
                offensiveness = static_cast<int>(std::lround(raw.get<double>()));
                offensiveness = std::clamp(offensiveness, 0, 100);
            } else {
                ++stats.rows_skipped;
                continue;
            }

            bool unambiguous = item.value("is_unambiguous", false);

            csv_out << csv_escape(term) << ',' << offensiveness << ','
                    << (unambiguous ? "true" : "false") << '\n';
            ++stats.rows_written;
        }
    }
    return stats;
}

}  // namespace dictnn
