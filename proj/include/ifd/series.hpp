#ifndef IFD_SERIES_HPP
#define IFD_SERIES_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ifd {

// A sampled curve: strictly increasing abscissae paired with finite
// values. Both invariants are enforced by make_grid_series.
struct GridSeries {
    std::vector<double> t;
    std::vector<double> value;
};

GridSeries make_grid_series(std::vector<double> t, std::vector<double> value);

// 17 significant digits — round-trip exact for binary64, '.' decimal
// separator regardless of environment.
std::string format_full(double x);

// Header line, then one "t,value" row per point. LF line endings.
void write_series_csv(std::ostream& os, std::string_view t_header,
                      std::string_view value_header, const GridSeries& s);

// Single-column variant used for sample output.
void write_column_csv(std::ostream& os, std::string_view header,
                      const std::vector<double>& xs);

} // namespace ifd

#endif
