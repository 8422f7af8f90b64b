#pragma once

#include <string>
#include <vector>

namespace ria {

/// Deterministic CSV emission: fixed column order, %.17g doubles, no quoting
/// (cells must not contain commas or newlines).
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns);
    void row(const std::vector<std::string>& cells);
    const std::string& text() const { return buf_; }
    size_t rows() const { return rows_; }

    static std::string num(double v);
    static std::string num(int64_t v);
    static std::string num(uint64_t v);

  private:
    size_t ncols_;
    size_t rows_ = 0;
    std::string buf_;
};

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Parses text produced by CsvWriter; parse(emit(x)) == x.
CsvTable parse_csv(const std::string& text);

}  // namespace ria
