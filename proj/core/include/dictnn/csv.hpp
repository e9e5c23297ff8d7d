#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace dictnn {

// Minimal RFC-4180 CSV reader. Handles quoted fields (embedded commas,
// doubled quotes, embedded newlines) as they appear in tweet dumps.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Reads the next record into `fields`. Returns false on end of input.
    // line() afterwards is the 1-based line the record started on.
    bool next(std::vector<std::string>& fields);

    std::size_t line() const { return record_line_; }

private:
    std::istream& in_;
    std::size_t current_line_ = 1;
    std::size_t record_line_ = 1;
};

// Quotes a field if it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace dictnn
