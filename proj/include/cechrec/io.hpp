#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "cechrec/metric.hpp"

namespace cechrec::io {

// CSV conventions: comma or whitespace separated numbers, blank lines and
// lines starting with '#' ignored. Ragged rows are a ParseError.

/// Full symmetric n×n matrix, or lower-triangular rows where row i carries
/// d(i,0)..d(i,i) (diagonal included, must be zero).
std::shared_ptr<const FiniteMetricSpace> read_distance_csv(std::istream& in);
/// One point per row, coordinates as columns.
EuclideanCloud read_points_csv(std::istream& in);
/// One parent index per line; sorted and deduplicated on read.
std::vector<Index> read_index_list(std::istream& in);

std::shared_ptr<const FiniteMetricSpace> read_distance_csv_file(const std::string& path);
EuclideanCloud read_points_csv_file(const std::string& path);
std::vector<Index> read_index_list_file(const std::string& path);

void write_points_csv(std::ostream& out, const EuclideanCloud& cloud);
void write_distance_csv(std::ostream& out, const FiniteMetricSpace& space);

/// Shortest decimal form that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace cechrec::io
