#pragma once

// Sampled E/E_PFA curves and their CSV form (header `d_over_R,E_over_EPFA`,
// 12 significant digits).

#include <string>
#include <vector>

#include "gradpfa/errors.hpp"

namespace gradpfa {

enum class CurveSource { Oracle, Pade, Gradient, External };

struct EnergyCurve {
    std::vector<double> d_over_R;
    std::vector<double> ratio;          // E / E_PFA
    std::vector<double> uncertainty;    // optional per-point bars (empty = none)
    CurveSource source = CurveSource::External;

    std::size_t size() const { return d_over_R.size(); }
    void validate() const;    // strictly increasing d/R, finite ratios
};

std::string to_string(CurveSource s);
CurveSource curve_source_from_string(const std::string& s);

void write_curve_csv(const EnergyCurve& c, const std::string& path);
EnergyCurve read_curve_csv(const std::string& path);

} // namespace gradpfa
