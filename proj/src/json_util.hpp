#pragma once

// Internal helpers shared by kernel_io and report: one way to encode exact
// rationals in JSON, one way to dump canonical bytes.

#include "fmk/matrix.hpp"
#include "fmk/rational.hpp"

#include "json.hpp"

#include <limits>
#include <string>

namespace fmk::detail {

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline nlohmann::json rational_to_json(const Rational& r) {
    if (is_integer(r) && fits_int64(num(r)))
        return static_cast<std::int64_t>(num(r));
    return to_string(r);
}

inline nlohmann::json matrix_to_json(const RatMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Sorted keys (nlohmann objects are ordered maps), two-space indent, LF,
// trailing newline.
inline std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace fmk::detail
