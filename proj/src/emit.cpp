#include "paf/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace paf {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

void write_curves_csv(const std::vector<LearningCurve>& curves, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "iteration";
    for (const auto& c : curves) out << ',' << c.label;
    out << '\n';
    size_t rows = 0;
    for (const auto& c : curves) rows = std::max(rows, c.msd_db.size());
    char buf[40];
    for (size_t i = 0; i < rows; ++i) {
        out << i;
        for (const auto& c : curves) {
            out << ',';
            if (i < c.msd_db.size()) {
                std::snprintf(buf, sizeof buf, "%.17g", c.msd_db[i]);
                out << buf;
            }
        }
        out << '\n';
    }
}

std::vector<LearningCurve> read_curves_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
    std::vector<LearningCurve> curves;
    {
        std::stringstream ss(line);
        std::string cell;
        bool first = true;
        while (std::getline(ss, cell, ',')) {
            if (first) {
                first = false;
                continue;  // iteration column
            }
            LearningCurve c;
            c.label = cell;
            curves.push_back(std::move(c));
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // iteration
        for (auto& c : curves) {
            if (!std::getline(ss, cell, ',')) cell.clear();
            if (!cell.empty()) c.msd_db.push_back(std::strtod(cell.c_str(), nullptr));
        }
    }
    return curves;
}

void write_curves_svg(const std::vector<LearningCurve>& curves, const std::string& path,
                      const std::string& title) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};
    const int W = 960, H = 600, ml = 70, mr = 30, mt = 40, mb = 50;
    const double pw = W - ml - mr, ph = H - mt - mb;

    size_t n = 1;
    double ymin = 0.0, ymax = 0.0;
    for (const auto& c : curves) {
        n = std::max(n, c.msd_db.size());
        for (double v : c.msd_db) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    ymin = std::floor(ymin / 5.0) * 5.0 - 5.0;
    ymax = std::ceil(ymax / 5.0) * 5.0 + 5.0;

    auto xpix = [&](double i) { return ml + pw * (n > 1 ? i / static_cast<double>(n - 1) : 0.0); };
    auto ypix = [&](double v) { return mt + ph * (ymax - v) / (ymax - ymin); };

    std::ofstream out = open_out(path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-family='sans-serif' "
           "font-size='16'>" << title << "</text>\n";
    // gridlines + y labels
    const double ystep = (ymax - ymin) > 60.0 ? 10.0 : 5.0;
    for (double v = ymin; v <= ymax + 1e-9; v += ystep) {
        const double y = ypix(v);
        out << "<line x1='" << ml << "' y1='" << y << "' x2='" << W - mr << "' y2='" << y
            << "' stroke='#dddddd'/>\n";
        out << "<text x='" << ml - 8 << "' y='" << y + 4
            << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << v << "</text>\n";
    }
    for (int t = 0; t <= 5; ++t) {
        const double i = static_cast<double>(n - 1) * t / 5.0;
        const double x = xpix(i);
        out << "<line x1='" << x << "' y1='" << mt << "' x2='" << x << "' y2='" << H - mb
            << "' stroke='#eeeeee'/>\n";
        out << "<text x='" << x << "' y='" << H - mb + 18
            << "' text-anchor='middle' font-family='sans-serif' font-size='11'>"
            << static_cast<long>(i) << "</text>\n";
    }
    out << "<text x='" << ml - 50 << "' y='" << mt + ph / 2
        << "' transform='rotate(-90 " << ml - 50 << ' ' << mt + ph / 2
        << ")' text-anchor='middle' font-family='sans-serif' font-size='12'>normalized MSD (dB)"
           "</text>\n";
    out << "<text x='" << ml + pw / 2 << "' y='" << H - 12
        << "' text-anchor='middle' font-family='sans-serif' font-size='12'>iteration</text>\n";
    out << "<rect x='" << ml << "' y='" << mt << "' width='" << pw << "' height='" << ph
        << "' fill='none' stroke='black'/>\n";

    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& c = curves[ci];
        if (c.msd_db.empty()) continue;
        const size_t stride = std::max<size_t>(1, c.msd_db.size() / 2000);
        out << "<polyline fill='none' stroke='" << kColors[ci % 10] << "' stroke-width='1.3' points='";
        for (size_t i = 0; i < c.msd_db.size(); i += stride)
            out << xpix(static_cast<double>(i)) << ',' << ypix(c.msd_db[i]) << ' ';
        out << xpix(static_cast<double>(c.msd_db.size() - 1)) << ','
            << ypix(c.msd_db.back()) << "'/>\n";
    }
    // legend
    double ly = mt + 14;
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        out << "<line x1='" << W - mr - 170 << "' y1='" << ly << "' x2='" << W - mr - 140
            << "' y2='" << ly << "' stroke='" << kColors[ci % 10] << "' stroke-width='2'/>\n";
        out << "<text x='" << W - mr - 134 << "' y='" << ly + 4
            << "' font-family='sans-serif' font-size='11'>" << curves[ci].label
            << (curves[ci].diverged ? " (diverged)" : "") << "</text>\n";
        ly += 16;
    }
    out << "</svg>\n";
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out = open_out(path);
    out << text;
}

}  // namespace paf
