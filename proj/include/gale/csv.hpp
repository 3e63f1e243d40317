// Deterministic, locale-independent number formatting for CSV emission.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gale::csv {

/// 9 significant digits, '.' separator, no locale dependence.
std::string format(double v);

/// Shortest representation that round-trips to the same double.
std::string format_exact(double v);

/// Writes a header line and rows of format()-ed values with LF endings.
class Writer {
public:
    explicit Writer(std::ostream& os) : os_(os) {}

    void header(std::span<const std::string> names);
    void row(std::span<const double> values);

private:
    std::ostream& os_;
};

} // namespace gale::csv
