#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ssf/group.hpp"

namespace ssf {

// Cayley-table text format:
//   line 1        order n
//   lines 2..n+1  n space-separated entries of row g (column h holds g*h)
//   line n+2      optional space-separated element labels

FiniteGroup read_group(std::istream& in);
FiniteGroup load_group(const std::filesystem::path& path);

void write_group(std::ostream& out, const FiniteGroup& g);
void save_group(const std::filesystem::path& path, const FiniteGroup& g);

}  // namespace ssf
