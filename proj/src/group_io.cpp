#include "ssf/group_io.hpp"

#include <fstream>
#include <sstream>

#include "ssf/errors.hpp"

namespace ssf {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

FiniteGroup read_group(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("empty group file");

  std::istringstream header(line);
  long long n = 0;
  std::string extra;
  if (!(header >> n) || (header >> extra) || n <= 0) {
    throw ParseError("line " + std::to_string(lineno) + ": expected a positive group order");
  }
  if (static_cast<unsigned long long>(n) > kMaxTableOrder) {
    throw BoundError("group order " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(kMaxTableOrder));
  }
  const auto order = static_cast<std::size_t>(n);

  std::vector<Elem> table;
  table.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    if (!next_content_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(order) + " table rows, got " +
                       std::to_string(r));
    }
    std::istringstream row(line);
    std::size_t count = 0;
    long long v = 0;
    while (row >> v) {
      if (v < 0 || v >= n) {
        throw ParseError("line " + std::to_string(lineno) + ": entry " + std::to_string(v) +
                         " out of range");
      }
      table.push_back(static_cast<Elem>(v));
      ++count;
    }
    if (!row.eof() || count != order) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(order) +
                       " integers");
    }
  }

  std::vector<std::string> labels;
  if (next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
    if (labels.size() != order) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(order) +
                       " labels");
    }
    if (next_content_line(in, line, lineno)) {
      throw ParseError("line " + std::to_string(lineno) + ": trailing content");
    }
  }
  return FiniteGroup(order, std::move(table), std::move(labels));
}

FiniteGroup load_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_group(in);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  const auto n = g.order();
  out << n << '\n';
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << '\n';
  }
  for (Elem a = 0; a < n; ++a) {
    if (a) out << ' ';
    out << g.label(a);
  }
  out << '\n';
}

void save_group(const std::filesystem::path& path, const FiniteGroup& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_group(out, g);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ssf
