#include "gale/csv.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

namespace gale::csv {

namespace {

std::string to_string(double v, int precision) {
    char buf[64];
    std::to_chars_result r =
        precision > 0
            ? std::to_chars(buf, buf + sizeof(buf), v,
                            std::chars_format::general, precision)
            : std::to_chars(buf, buf + sizeof(buf), v);
    if (r.ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf, r.ptr);
}

} // namespace

std::string format(double v) { return to_string(v, 9); }

std::string format_exact(double v) { return to_string(v, 0); }

void Writer::header(std::span<const std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) {
            os_ << ',';
        }
        os_ << names[i];
    }
    os_ << '\n';
}

void Writer::row(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            os_ << ',';
        }
        os_ << format(values[i]);
    }
    os_ << '\n';
}

} // namespace gale::csv
