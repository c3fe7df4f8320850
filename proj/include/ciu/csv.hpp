/** @file csv.hpp
 *  @brief RFC-4180 style CSV ingestion with schema inference.
 *
 *  A column is numeric when every non-missing value parses as a number,
 *  categorical otherwise (levels in first-appearance order). Missing cells
 *  (empty or "NA"): rows with a missing label are dropped, missing numeric
 *  values are median-imputed, missing categorical values become a dedicated
 *  "missing" level. Numeric ranges default to the observed min/max.
 */

#ifndef CIU_CSV_HPP
#define CIU_CSV_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ciu/schema.hpp"

namespace ciu {

struct SchemaHint {
    /// Label column name; empty means the last column.
    std::string label_column;
    /// Force these columns to be treated as categorical even if numeric.
    std::vector<std::string> force_categorical;
    /// Override the perturbation range of numeric columns.
    std::map<std::string, std::pair<double, double>> numeric_range;
};

Dataset load_csv(const std::string& path, const SchemaHint& hint = {});
Dataset parse_csv(const std::string& text, const SchemaHint& hint = {});

/// Splits one CSV record honoring quotes; used by the parser and tests.
std::vector<std::string> split_csv_record(const std::string& line);

void write_csv(const Dataset& data, const std::string& path);

} // namespace ciu

#endif // CIU_CSV_HPP
