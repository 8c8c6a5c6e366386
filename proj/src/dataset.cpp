#include "patchclust/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace patchclust {

Dataset::Dataset(std::vector<std::string> names, std::vector<double> values,
                 std::vector<long long> labels)
    : names_(std::move(names)), values_(std::move(values)), labels_(std::move(labels)) {
    rows_ = names_.empty() ? 0 : values_.size() / names_.size();
}

std::vector<double> Dataset::column(std::size_t col) const {
    std::vector<double> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(value(i, col));
    return out;
}

std::size_t Dataset::column_index(const std::string& name) const {
    for (std::size_t j = 0; j < names_.size(); ++j)
        if (names_[j] == name) return j;
    throw std::invalid_argument("no column named '" + name + "'");
}

Dataset validate_dataset(const std::vector<std::vector<double>>& raw,
                         std::vector<std::string> names,
                         std::vector<long long> labels) {
    if (names.empty()) throw std::invalid_argument("dataset needs at least one column");

    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty()) throw std::invalid_argument("empty column name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate column name '" + name + "'");
    }

    const std::size_t m = names.size();
    std::vector<double> values;
    values.reserve(raw.size() * m);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != m)
            throw std::invalid_argument("ragged row " + std::to_string(i) + ": expected " +
                                        std::to_string(m) + " values, got " +
                                        std::to_string(raw[i].size()));
        for (std::size_t j = 0; j < m; ++j) {
            if (!std::isfinite(raw[i][j]))
                throw std::invalid_argument("non-finite value at row " + std::to_string(i) +
                                            ", column " + std::to_string(j));
            values.push_back(raw[i][j]);
        }
    }

    if (!labels.empty() && labels.size() != raw.size())
        throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                    " does not match row count " + std::to_string(raw.size()));

    return Dataset(std::move(names), std::move(values), std::move(labels));
}

}  // namespace patchclust
