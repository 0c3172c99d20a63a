#include "gradpfa/curve.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gradpfa {

void EnergyCurve::validate() const {
    if (ratio.size() != d_over_R.size())
        throw DomainError("curve column lengths differ");
    for (std::size_t i = 0; i < d_over_R.size(); ++i) {
        if (!std::isfinite(ratio[i]) || !std::isfinite(d_over_R[i]))
            throw DomainError("curve contains non-finite entries");
        if (i > 0 && !(d_over_R[i] > d_over_R[i - 1]))
            throw DomainError("curve abscissae must be strictly increasing");
    }
}

std::string to_string(CurveSource s) {
    switch (s) {
        case CurveSource::Oracle: return "oracle";
        case CurveSource::Pade: return "pade";
        case CurveSource::Gradient: return "gradient";
        case CurveSource::External: return "external";
    }
    return "?";
}

CurveSource curve_source_from_string(const std::string& s) {
    if (s == "oracle") return CurveSource::Oracle;
    if (s == "pade") return CurveSource::Pade;
    if (s == "gradient") return CurveSource::Gradient;
    if (s == "external") return CurveSource::External;
    throw DomainError("unknown curve source '" + s + "'");
}

void write_curve_csv(const EnergyCurve& c, const std::string& path) {
    c.validate();
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write curve CSV " + path);
    const bool bars = c.uncertainty.size() == c.size();
    out << "d_over_R,E_over_EPFA";
    if (bars) out << ",uncertainty";
    out << "\n# source: " << to_string(c.source) << "\n";
    char buf[128];
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (bars)
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.3g\n", c.d_over_R[i],
                          c.ratio[i], c.uncertainty[i]);
        else
            std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", c.d_over_R[i], c.ratio[i]);
        out << buf;
    }
}

EnergyCurve read_curve_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open curve CSV " + path);
    EnergyCurve c;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("source:");
            if (pos != std::string::npos) {
                std::string tag = line.substr(pos + 7);
                tag.erase(0, tag.find_first_not_of(" \t"));
                tag.erase(tag.find_last_not_of(" \t\r") + 1);
                c.source = curve_source_from_string(tag);
            }
            continue;
        }
        if (line.find("d_over_R") != std::string::npos) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ls, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.size() < 2) throw DomainError("curve CSV row needs >= 2 columns");
        c.d_over_R.push_back(vals[0]);
        c.ratio.push_back(vals[1]);
        if (vals.size() >= 3) c.uncertainty.push_back(vals[2]);
    }
    c.validate();
    return c;
}

} // namespace gradpfa
