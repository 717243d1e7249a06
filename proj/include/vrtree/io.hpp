#ifndef VRTREE_IO_HPP
#define VRTREE_IO_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"
#include "vrtree/point_cloud.hpp"

// Edge list:   '#' lines are comments; first other line is "n m", followed by
//              m lines "u v". Written with u < v, sorted, trailing newline.
// Point cloud: CSV, one point per line, comma-separated decimals, no header.

namespace vrtree {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i <= line.size()) {
    if (sep == ' ') {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
        ++i;
      if (i == line.size())
        break;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != sep && !(sep == ' ' && line[j] == '\t'))
      ++j;
    out.push_back(line.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty())
    return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    const auto fields = detail::split_fields(line, ' ');
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (fields.size() != 2 || !detail::parse_number(fields[0], a) || !detail::parse_number(fields[1], b))
      throw parse_error(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m)
      throw parse_error(line_no, "more edge lines than the " + std::to_string(m) + " declared");
    for (std::uint64_t x : {a, b})
      if (x >= n)
        throw parse_error(line_no, "vertex " + std::to_string(x) + " out of range");
    if (a == b)
      throw parse_error(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  if (!have_header)
    throw parse_error(line_no + 1, "missing header \"n m\"");
  if (edges.size() != m)
    throw parse_error(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return build_graph(n, edges);
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

/// Canonical form: header with the deduplicated edge count, then u < v lines
/// in lexicographic order.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges())
    os << u << ' ' << v << '\n';
  return os.str();
}

inline PointCloud read_point_cloud(std::istream& in) {
  std::vector<std::vector<double>> points;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = detail::trim(raw);
    if (line.empty())
      continue;
    std::vector<double> p;
    for (auto field : detail::split_fields(line, ',')) {
      double x = 0.0;
      if (!detail::parse_number(field, x))
        throw parse_error(line_no, "bad coordinate '" + std::string(field) + "'");
      p.push_back(x);
    }
    if (!points.empty() && p.size() != points.front().size())
      throw parse_error(line_no, "point has " + std::to_string(p.size()) + " coordinates, expected " +
                                     std::to_string(points.front().size()));
    points.push_back(std::move(p));
  }
  return PointCloud(points);
}

inline PointCloud read_point_cloud(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_point_cloud(in);
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(path + ": cannot open for reading");
  return in;
}

} // namespace detail

inline Graph read_edge_list_file(const std::string& path) {
  auto in = detail::open_input(path);
  try {
    return read_edge_list(in);
  } catch (const parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline PointCloud read_point_cloud_file(const std::string& path) {
  auto in = detail::open_input(path);
  try {
    return read_point_cloud(in);
  } catch (const parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

} // namespace vrtree

#endif
