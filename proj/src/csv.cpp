#include "szego/csv.hpp"

#include <charconv>
#include <cmath>

namespace szego::csvio {

std::string format_double(double value) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void CsvWriter::header(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out_ << ',';
        out_ << names[i];
    }
    out_ << '\n';
}

void CsvWriter::raw_line(const std::string& line) { out_ << line << '\n'; }

CsvWriter& CsvWriter::cell(const std::string& value) {
    if (row_open_) out_ << ',';
    out_ << value;
    row_open_ = true;
    return *this;
}

CsvWriter& CsvWriter::cell(int value) { return cell(std::to_string(value)); }

CsvWriter& CsvWriter::cell(double value) { return cell(format_double(value)); }

void CsvWriter::end_row() {
    out_ << '\n';
    row_open_ = false;
}

}  // namespace szego::csvio
