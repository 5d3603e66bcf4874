#include "cechrec/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cechrec::io {

namespace {

using Rows = std::vector<std::vector<double>>;

double parse_number(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  // from_chars rejects a leading '+'.
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad number '" + std::string(token) + "'");
  return value;
}

Rows read_rows(std::istream& in) {
  Rows rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> row;
    std::string_view rest(line);
    bool expect_value = true;
    std::size_t i = 0;
    while (i < rest.size()) {
      const char c = rest[i];
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c == ',') {
        if (expect_value) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": empty field");
        expect_value = true;
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < rest.size() && rest[j] != ',' && rest[j] != ' ' && rest[j] != '\t') ++j;
      row.push_back(parse_number(rest.substr(i, j - i), line_no));
      expect_value = false;
      i = j;
    }
    if (expect_value && !row.empty())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": trailing separator");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return in;
}

}  // namespace

std::shared_ptr<const FiniteMetricSpace> read_distance_csv(std::istream& in) {
  const Rows rows = read_rows(in);
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  const bool square = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.size() == rows.size(); });
  if (square) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) dist(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (row.size() != static_cast<std::size_t>(i) + 1)
        throw Error(Errc::ParseError, "ragged distance row " + std::to_string(i) + ": expected " +
                                          std::to_string(n) + " (full) or " + std::to_string(i + 1) +
                                          " (lower-triangular) entries, got " + std::to_string(row.size()));
      for (Eigen::Index j = 0; j <= i; ++j) dist(i, j) = dist(j, i) = row[static_cast<std::size_t>(j)];
      if (row.back() != 0.0) throw Error(Errc::ParseError, "nonzero diagonal in lower-triangular row " + std::to_string(i));
    }
  }
  return std::make_shared<const FiniteMetricSpace>(std::move(dist));
}

EuclideanCloud read_points_csv(std::istream& in) {
  const Rows rows = read_rows(in);
  if (rows.empty()) return EuclideanCloud(Eigen::MatrixXd(0, 1));
  const std::size_t dim = rows.front().size();
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      throw Error(Errc::ParseError, "ragged point row " + std::to_string(i) + ": expected " + std::to_string(dim) +
                                        " coordinates, got " + std::to_string(rows[i].size()));
    for (std::size_t j = 0; j < dim; ++j)
      coords(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return EuclideanCloud(std::move(coords));
}

std::vector<Index> read_index_list(std::istream& in) {
  std::vector<Index> out;
  for (const auto& row : read_rows(in)) {
    if (row.size() != 1) throw Error(Errc::ParseError, "index list lines must hold exactly one index");
    const double v = row.front();
    if (v < 0 || v != static_cast<double>(static_cast<Index>(v)))
      throw Error(Errc::ParseError, "index list entry is not a nonnegative integer");
    out.push_back(static_cast<Index>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::shared_ptr<const FiniteMetricSpace> read_distance_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_distance_csv(in);
}

EuclideanCloud read_points_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_points_csv(in);
}

std::vector<Index> read_index_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_index_list(in);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_points_csv(std::ostream& out, const EuclideanCloud& cloud) {
  const auto& c = cloud.coords();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (j) out << ',';
      out << format_double(c(i, j));
    }
    out << '\n';
  }
}

void write_distance_csv(std::ostream& out, const FiniteMetricSpace& space) {
  const auto& d = space.matrix();
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (j) out << ',';
      out << format_double(d(i, j));
    }
    out << '\n';
  }
}

}  // namespace cechrec::io
