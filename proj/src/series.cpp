#include "ifd/series.hpp"

#include <charconv>
#include <cmath>

#include "ifd/errors.hpp"

namespace ifd {

GridSeries make_grid_series(std::vector<double> t, std::vector<double> value) {
    if (t.empty())
        throw EmptyInput("a grid series needs at least one point");
    if (t.size() != value.size())
        throw DomainError("grid series columns differ in length");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!std::isfinite(t[i]))
            throw NonFinite(t[i], "grid abscissa is not finite");
        if (!std::isfinite(value[i]))
            throw NonFinite(t[i], "grid value is not finite");
        if (i > 0 && !(t[i - 1] < t[i]))
            throw DomainError("grid abscissae must be strictly increasing");
    }
    return {std::move(t), std::move(value)};
}

std::string format_full(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_series_csv(std::ostream& os, std::string_view t_header,
                      std::string_view value_header, const GridSeries& s) {
    os << t_header << ',' << value_header << '\n';
    for (std::size_t i = 0; i < s.t.size(); ++i)
        os << format_full(s.t[i]) << ',' << format_full(s.value[i]) << '\n';
}

void write_column_csv(std::ostream& os, std::string_view header,
                      const std::vector<double>& xs) {
    os << header << '\n';
    for (double x : xs)
        os << format_full(x) << '\n';
}

} // namespace ifd
