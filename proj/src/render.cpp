#include "som/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace som {

namespace {

std::string pgm(const LatticeSpec& lattice, const std::vector<unsigned char>& pixels) {
    std::string out = "P5\n" + std::to_string(lattice.cols()) + " " + std::to_string(lattice.rows()) + "\n255\n";
    out.append(pixels.begin(), pixels.end());
    return out;
}

} // namespace

std::string render_label_map_text(const LabelMap& labels) {
    const auto& lat = labels.lattice();
    std::string out;
    out.reserve(lat.rows() * (lat.cols() + 1));
    for (std::size_t j = 0; j < lat.neuron_count(); ++j) {
        const auto& e = labels[j];
        out += !e ? '.' : (*e <= 9 ? static_cast<char>('0' + *e) : '+');
        if ((j + 1) % lat.cols() == 0) out += '\n';
    }
    return out;
}

std::string render_umatrix_text(const UMatrix& u) {
    std::string out;
    char buf[64];
    for (std::size_t j = 0; j < u.values.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.6f", u.values[j]);
        out += buf;
        out += (j + 1) % u.lattice.cols() == 0 ? '\n' : ' ';
    }
    return out;
}

std::string render_umatrix_pgm(const UMatrix& u) {
    const auto [lo, hi] = std::minmax_element(u.values.begin(), u.values.end());
    const double range = *hi - *lo;
    std::vector<unsigned char> px(u.values.size(), 0);
    if (range > 0.0) {
        for (std::size_t j = 0; j < px.size(); ++j) {
            px[j] = static_cast<unsigned char>(std::lround(255.0 * (u.values[j] - *lo) / range));
        }
    }
    return pgm(u.lattice, px);
}

std::string render_label_map_pgm(const LabelMap& labels) {
    ClassLabel top = 0;
    for (const auto& e : labels.entries()) {
        if (e) top = std::max(top, *e);
    }
    std::vector<unsigned char> px;
    px.reserve(labels.entries().size());
    for (const auto& e : labels.entries()) {
        px.push_back(!e ? 0
                        : static_cast<unsigned char>(std::lround(255.0 * (static_cast<double>(*e) + 1.0) /
                                                                 (static_cast<double>(top) + 1.0))));
    }
    return pgm(labels.lattice(), px);
}

} // namespace som
