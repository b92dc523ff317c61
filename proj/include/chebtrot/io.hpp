#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace chebtrot {

// Shortest round-trip text for a double; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

// RFC-4180 CSV assembled row by row.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void comment(std::string line) { comments_.push_back(std::move(line)); }
    void add_row(std::vector<std::string> cells);
    std::string str() const;

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

private:
    std::vector<std::string> comments_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct ParsedCsv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
// Skips leading lines that start with '#'.
ParsedCsv parse_csv(std::string_view text);

// Write through a temporary sibling then rename. Throws std::runtime_error when the
// directory is missing or unwritable.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace chebtrot
