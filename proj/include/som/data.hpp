#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace som {

using ClassLabel = std::uint32_t;

// Name of the label column in CSV files, matched case-insensitively.
inline constexpr std::string_view kLabelColumn = "fracture_location";

// Fracture location classes of the welding dataset.
inline constexpr ClassLabel kFractureTmazCu = 0;
inline constexpr ClassLabel kFractureTmazAl = 1;

struct Record {
    std::vector<double> features;
    std::optional<ClassLabel> label;

    friend bool operator==(const Record&, const Record&) = default;
};

/// Named feature columns plus an ordered list of records.
///
/// Every record carries exactly feature_count() finite values. Whether a label
/// column exists is tracked separately from whether individual records are
/// labeled, so a CSV with blank label cells round-trips.
class Dataset {
public:
    Dataset() = default;
    // Throws DataError on empty or duplicate names.
    explicit Dataset(std::vector<std::string> feature_names, bool has_label_column = false);

    std::size_t feature_count() const noexcept { return feature_names_.size(); }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }
    const std::vector<Record>& records() const noexcept { return records_; }
    const Record& operator[](std::size_t i) const { return records_[i]; }

    bool has_label_column() const noexcept { return has_label_column_; }
    void set_has_label_column(bool v) noexcept { has_label_column_ = v; }
    bool all_labeled() const noexcept;

    // Throws ShapeError on wrong width, DataError on non-finite values.
    void add(Record r);

    // Same columns, no records.
    Dataset empty_like() const { return Dataset(*this, {}); }

    // Row-major n x m copy of all features.
    std::vector<double> feature_matrix() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    Dataset(const Dataset& shape, std::vector<Record> records)
        : feature_names_(shape.feature_names_), records_(std::move(records)),
          has_label_column_(shape.has_label_column_) {}

    std::vector<std::string> feature_names_;
    std::vector<Record> records_;
    bool has_label_column_ = false;
};

// Comma-separated, header first, LF or CRLF. The label column may sit at any
// position; all other columns are real-valued features.
Dataset parse_csv(std::istream& in);
Dataset parse_csv(std::string_view text);
Dataset load_csv(const std::string& path);

// Features in header order, then the label column if the dataset has one.
// Reals use the shortest representation that parses back to the same double.
void write_csv(const Dataset& ds, std::ostream& out);
std::string write_csv(const Dataset& ds);
void save_csv(const Dataset& ds, const std::string& path);

// Shortest round-trip decimal form of v.
std::string format_real(double v);

/// Per-feature min-max scaling into [0, 1].
struct NormalizationParams {
    std::vector<double> min;
    std::vector<double> max;

    std::size_t feature_count() const noexcept { return min.size(); }

    // Constant features (min == max) map to 0.
    std::vector<double> apply(std::span<const double> x) const;
    std::vector<double> invert(std::span<const double> z) const;

    friend bool operator==(const NormalizationParams&, const NormalizationParams&) = default;
};

NormalizationParams fit_normalizer(const Dataset& ds);
Dataset apply_normalizer(const NormalizationParams& params, const Dataset& ds);
Dataset invert_normalizer(const NormalizationParams& params, const Dataset& ds);

// Seeded shuffle, then the first ceil(train_fraction * n) records go to train.
std::pair<Dataset, Dataset> train_test_split(const Dataset& ds, double train_fraction,
                                             std::uint64_t seed);

/// Synthetic friction-stir-weld parameter table.
///
/// Features are drawn uniformly, in this order per record:
///   shoulder_diameter_mm     in [15, 25]
///   rotational_speed_rpm     in [600, 1200]
///   traverse_speed_mm_min    in [50, 300]
/// With d, r, v the features rescaled to [0, 1] by those ranges, the score is
///   s = 0.3 d + 0.5 r - 0.2 v        (range [-0.2, 0.8], midpoint 0.3)
/// and the label is 1 (fracture at TMAZ Al) when s > 0.3, else 0 (TMAZ Cu).
/// A fourth uniform draw per record flips the label when it falls below 0.02.
Dataset synth_generate(std::size_t n, std::uint64_t seed);

namespace synth {
inline constexpr double kShoulderMin = 15.0, kShoulderMax = 25.0;
inline constexpr double kRpmMin = 600.0, kRpmMax = 1200.0;
inline constexpr double kTraverseMin = 50.0, kTraverseMax = 300.0;
inline constexpr double kWeightShoulder = 0.3, kWeightRpm = 0.5, kWeightTraverse = -0.2;
inline constexpr double kScoreMidpoint = 0.3;
inline constexpr double kLabelNoise = 0.02;
} // namespace synth

} // namespace som
