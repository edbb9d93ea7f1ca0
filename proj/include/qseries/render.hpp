#ifndef QSERIES_RENDER_HPP
#define QSERIES_RENDER_HPP

#include <string>
#include <string_view>

#include <qseries/series.hpp>

namespace qseries
{

// "1 - 2*q - q^2 + 5/2*q^(7/2) + O(q^8)": ascending exponents, exact rationals,
// "0" for no terms, no O-term for exact series.
std::string render_text(const QSeries &s);

// {"terms": [{num, den_exp, re_num, re_den, im_num, im_den}, ...],
//  "trunc": {"num", "den"} or null}. Integers that do not fit int64 are strings.
std::string render_json(const QSeries &s, int indent = -1);

// Inverse of render_json. Throws InvalidArgument on malformed input.
QSeries parse_series_json(std::string_view text);

} // namespace qseries

#endif
