#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace szego::csvio {

// 17 significant digits, '.' decimal separator, locale independent.
std::string format_double(double value);

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names);
    void raw_line(const std::string& line);

    CsvWriter& cell(const std::string& value);
    CsvWriter& cell(int value);
    CsvWriter& cell(double value);
    void end_row();

private:
    std::ostream& out_;
    bool row_open_ = false;
};

}  // namespace szego::csvio
