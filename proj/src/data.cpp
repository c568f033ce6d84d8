#include "som/data.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "som/errors.hpp"
#include "som/rng.hpp"

namespace som {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

std::optional<double> parse_real(std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

void check_finite(std::span<const double> xs) {
    for (double v : xs) {
        if (!std::isfinite(v)) throw DataError("non-finite feature value");
    }
}

} // namespace

Dataset::Dataset(std::vector<std::string> feature_names, bool has_label_column)
    : feature_names_(std::move(feature_names)), has_label_column_(has_label_column) {
    std::set<std::string> seen;
    for (const auto& name : feature_names_) {
        if (name.empty()) throw DataError("feature name must be non-empty");
        if (!seen.insert(name).second) throw DataError("duplicate feature name '" + name + "'");
    }
}

bool Dataset::all_labeled() const noexcept {
    return std::all_of(records_.begin(), records_.end(), [](const Record& r) { return r.label.has_value(); });
}

void Dataset::add(Record r) {
    if (r.features.size() != feature_count()) {
        throw ShapeError("record has " + std::to_string(r.features.size()) + " features, expected " +
                         std::to_string(feature_count()));
    }
    check_finite(r.features);
    if (r.label) has_label_column_ = true;
    records_.push_back(std::move(r));
}

std::vector<double> Dataset::feature_matrix() const {
    std::vector<double> out;
    out.reserve(size() * feature_count());
    for (const auto& r : records_) out.insert(out.end(), r.features.begin(), r.features.end());
    return out;
}

Dataset parse_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!trim(line).empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("missing header row", 1);

    const auto header = split_fields(line);
    std::optional<std::size_t> label_col;
    std::vector<std::string> names;
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = header[i];
        if (name.empty()) throw ParseError("empty column name in header", line_no);
        if (!seen.emplace(name).second) {
            throw ParseError("duplicate column '" + std::string(name) + "'", line_no);
        }
        if (iequals(name, kLabelColumn)) {
            if (label_col) throw ParseError("duplicate label column", line_no);
            label_col = i;
        } else {
            names.emplace_back(name);
        }
    }

    Dataset ds(std::move(names), label_col.has_value());
    while (next_line()) {
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        Record rec;
        rec.features.reserve(ds.feature_count());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto cell = fields[i];
            if (label_col && i == *label_col) {
                if (cell.empty()) continue;
                ClassLabel v = 0;
                auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
                if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
                    throw ParseError("invalid label '" + std::string(cell) + "'", line_no);
                }
                rec.label = v;
                continue;
            }
            const auto v = parse_real(cell);
            if (!v) {
                throw ParseError("non-numeric value '" + std::string(cell) + "' in column '" +
                                     std::string(header[i]) + "'",
                                 line_no);
            }
            rec.features.push_back(*v);
        }
        ds.add(std::move(rec));
    }
    return ds;
}

Dataset parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_csv(in);
}

Dataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_csv(in);
}

std::string format_real(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_csv(const Dataset& ds, std::ostream& out) {
    const auto& names = ds.feature_names();
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
    if (ds.has_label_column()) out << (names.empty() ? "" : ",") << kLabelColumn;
    out << '\n';
    for (const auto& r : ds.records()) {
        for (std::size_t i = 0; i < r.features.size(); ++i) out << (i ? "," : "") << format_real(r.features[i]);
        if (ds.has_label_column()) {
            out << (r.features.empty() ? "" : ",");
            if (r.label) out << *r.label;
        }
        out << '\n';
    }
}

std::string write_csv(const Dataset& ds) {
    std::ostringstream out;
    write_csv(ds, out);
    return out.str();
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_csv(ds, out);
}

std::vector<double> NormalizationParams::apply(std::span<const double> x) const {
    if (x.size() != feature_count()) {
        throw ShapeError("normalizer expects " + std::to_string(feature_count()) + " features, got " +
                         std::to_string(x.size()));
    }
    std::vector<double> z(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double range = max[k] - min[k];
        z[k] = range > 0.0 ? (x[k] - min[k]) / range : 0.0;
    }
    return z;
}

std::vector<double> NormalizationParams::invert(std::span<const double> z) const {
    if (z.size() != feature_count()) {
        throw ShapeError("normalizer expects " + std::to_string(feature_count()) + " features, got " +
                         std::to_string(z.size()));
    }
    std::vector<double> x(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) x[k] = min[k] + z[k] * (max[k] - min[k]);
    return x;
}

NormalizationParams fit_normalizer(const Dataset& ds) {
    if (ds.empty()) throw DataError("cannot fit normalizer on an empty dataset");
    NormalizationParams p{ds[0].features, ds[0].features};
    for (const auto& r : ds.records()) {
        for (std::size_t k = 0; k < r.features.size(); ++k) {
            p.min[k] = std::min(p.min[k], r.features[k]);
            p.max[k] = std::max(p.max[k], r.features[k]);
        }
    }
    return p;
}

namespace {

template <typename F>
Dataset map_features(const Dataset& ds, F&& f) {
    Dataset out = ds.empty_like();
    for (const auto& r : ds.records()) out.add({f(r.features), r.label});
    return out;
}

} // namespace

Dataset apply_normalizer(const NormalizationParams& params, const Dataset& ds) {
    if (params.feature_count() != ds.feature_count()) {
        throw ShapeError("normalizer fitted on " + std::to_string(params.feature_count()) +
                         " features, dataset has " + std::to_string(ds.feature_count()));
    }
    return map_features(ds, [&](const auto& x) { return params.apply(x); });
}

Dataset invert_normalizer(const NormalizationParams& params, const Dataset& ds) {
    if (params.feature_count() != ds.feature_count()) {
        throw ShapeError("normalizer fitted on " + std::to_string(params.feature_count()) +
                         " features, dataset has " + std::to_string(ds.feature_count()));
    }
    return map_features(ds, [&](const auto& z) { return params.invert(z); });
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& ds, double train_fraction,
                                             std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ConfigError("train fraction must lie in (0, 1), got " + format_real(train_fraction));
    }
    if (ds.size() < 2) throw DataError("splitting needs at least 2 records");

    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(std::span(order));

    const auto n_train =
        static_cast<std::size_t>(std::ceil(train_fraction * static_cast<double>(ds.size())));
    Dataset train = ds.empty_like();
    Dataset test = ds.empty_like();
    for (std::size_t i = 0; i < order.size(); ++i) (i < n_train ? train : test).add(ds[order[i]]);
    return {std::move(train), std::move(test)};
}

Dataset synth_generate(std::size_t n, std::uint64_t seed) {
    using namespace synth;
    if (n == 0) throw ConfigError("synthetic dataset size must be at least 1");

    Dataset ds({"shoulder_diameter_mm", "rotational_speed_rpm", "traverse_speed_mm_min"}, true);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double shoulder = rng.uniform(kShoulderMin, kShoulderMax);
        const double rpm = rng.uniform(kRpmMin, kRpmMax);
        const double traverse = rng.uniform(kTraverseMin, kTraverseMax);
        const double score = kWeightShoulder * (shoulder - kShoulderMin) / (kShoulderMax - kShoulderMin) +
                             kWeightRpm * (rpm - kRpmMin) / (kRpmMax - kRpmMin) +
                             kWeightTraverse * (traverse - kTraverseMin) / (kTraverseMax - kTraverseMin);
        ClassLabel label = score > kScoreMidpoint ? kFractureTmazAl : kFractureTmazCu;
        if (rng.uniform01() < kLabelNoise) label = 1 - label;
        ds.add({{shoulder, rpm, traverse}, label});
    }
    return ds;
}

} // namespace som
