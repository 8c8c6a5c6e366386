#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace patchclust {

// Immutable rectangular table of finite feature values. Rows are identified
// by their 0-based ingestion index everywhere in this library; all reports
// reference rows by that index so results can be mapped back to the source
// table. Labels are carried along but never treated as a feature.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<std::string> names, std::vector<double> values,
            std::vector<long long> labels = {});

    std::size_t row_count() const { return rows_; }
    std::size_t column_count() const { return names_.size(); }
    bool has_labels() const { return !labels_.empty(); }

    double value(std::size_t row, std::size_t col) const {
        return values_[row * names_.size() + col];
    }

    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<long long>& labels() const { return labels_; }

    std::vector<double> column(std::size_t col) const;

    // Index of a column by name; throws if absent.
    std::size_t column_index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<double> values_;  // row-major, rows_ x names_.size()
    std::vector<long long> labels_;
    std::size_t rows_ = 0;
};

// Validates a raw table and produces a Dataset. Throws std::invalid_argument
// naming the offending row/column on non-finite values, on duplicate or empty
// column names, on ragged rows, and on a label vector of the wrong length.
// An empty table (zero rows) is valid.
Dataset validate_dataset(const std::vector<std::vector<double>>& raw,
                         std::vector<std::string> names,
                         std::vector<long long> labels = {});

}  // namespace patchclust
