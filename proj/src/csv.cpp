#include "wsnsim/csv.hpp"

#include <cstdio>

#include "wsnsim/errors.hpp"

namespace wsnsim {

std::string fmt_mean(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& header)
    : out_(path, std::ios::binary) {
    if (!out_) throw SimError("cannot open output file " + path.string());
    out_ << header << '\n';
}

void CsvWriter::write_field(const std::string& field, bool first) {
    if (!first) out_ << ',';
    out_ << field;
}

void CsvWriter::note(const std::string& text) {
    out_ << "# " << text << '\n';
    out_.flush();
}

} // namespace wsnsim
