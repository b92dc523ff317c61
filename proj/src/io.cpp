#include "chebtrot/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chebtrot {

namespace fs = std::filesystem;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf.data(), ptr);
}

namespace {

std::string quote(const std::string& cell) {
    if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void append_row(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += quote(cells[i]);
    }
    out += "\r\n";
}

}  // namespace

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw std::logic_error("CSV row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::string out;
    for (const auto& c : comments_) out += "# " + c + "\r\n";
    append_row(out, header_);
    for (const auto& r : rows_) append_row(out, r);
    return out;
}

ParsedCsv parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> row;
    std::string cell;
    bool in_quotes = false, at_line_start = true, skipping = false, row_has_data = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (at_line_start && !in_quotes) {
            at_line_start = false;
            skipping = records.empty() && c == '#';
        }
        if (skipping) {
            if (c == '\n') at_line_start = true, skipping = false;
            continue;
        }
        if (in_quotes) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                in_quotes = false;
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            row_has_data = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
            row_has_data = true;
        } else if (c == '\r') {
            continue;
        } else if (c == '\n') {
            if (row_has_data || !cell.empty()) {
                row.push_back(std::move(cell));
                records.push_back(std::move(row));
            }
            row.clear();
            cell.clear();
            row_has_data = false;
            at_line_start = true;
        } else {
            cell += c;
            row_has_data = true;
        }
    }
    if (row_has_data || !cell.empty()) {
        row.push_back(std::move(cell));
        records.push_back(std::move(row));
    }
    ParsedCsv out;
    if (records.empty()) return out;
    out.header = std::move(records.front());
    out.rows.assign(std::make_move_iterator(records.begin() + 1), std::make_move_iterator(records.end()));
    return out;
}

void write_file_atomic(const fs::path& path, std::string_view content) {
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    if (!fs::is_directory(dir)) throw std::runtime_error("output directory does not exist: " + dir.string());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace chebtrot
