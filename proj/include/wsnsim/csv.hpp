#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "wsnsim/energy.hpp"

namespace wsnsim {

std::string fmt_mean(double v);  // fixed 3 decimals, stable across runs

/// Comma-separated writer: header row, LF endings, no quoting (the protocol
/// label is the only non-numeric field).
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& header);

    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((write_field(to_field(fields), first), first = false), ...);
        out_ << '\n';
    }

    /// Out-of-band failure note; consumers should skip '#' lines.
    void note(const std::string& text);

    void flush() { out_.flush(); }

private:
    static std::string to_field(const std::string& s) { return s; }
    static std::string to_field(const char* s) { return s; }
    static std::string to_field(Energy e) { return to_decimal_string(e); }
    template <class T>
    static std::string to_field(T v) {
        return std::to_string(v);
    }

    void write_field(const std::string& field, bool first);

    std::ofstream out_;
};

} // namespace wsnsim
