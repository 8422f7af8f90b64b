#include "ria/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace ria {

namespace {
void append_joined(std::string& buf, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        const std::string& c = cells[i];
        if (c.find_first_of(",\n\r") != std::string::npos)
            throw std::invalid_argument("csv cell contains a separator: " + c);
        if (i) buf += ',';
        buf += c;
    }
    buf += '\n';
}
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : ncols_(columns.size()) {
    append_joined(buf_, columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_)
        throw std::invalid_argument("csv row has " + std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(ncols_));
    append_joined(buf_, cells);
    ++rows_;
}

std::string CsvWriter::num(double v) {
    char b[40];
    std::snprintf(b, sizeof(b), "%.17g", v);
    return b;
}

std::string CsvWriter::num(int64_t v) { return std::to_string(v); }
std::string CsvWriter::num(uint64_t v) { return std::to_string(v); }

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::vector<std::string> cur;
    std::string cell;
    bool in_header = true;
    for (size_t i = 0; i <= text.size(); ++i) {
        char ch = i < text.size() ? text[i] : '\n';
        if (ch == ',') {
            cur.push_back(cell);
            cell.clear();
        } else if (ch == '\n') {
            if (i == text.size() && cell.empty() && cur.empty()) break;
            cur.push_back(cell);
            cell.clear();
            if (in_header) {
                t.columns = cur;
                in_header = false;
            } else {
                t.rows.push_back(cur);
            }
            cur.clear();
        } else if (ch != '\r') {
            cell += ch;
        }
    }
    return t;
}

}  // namespace ria
