#pragma once

// Point-set files: UTF-8 text, header `n=<int> surface=<tag> delta=<rational|none>`,
// then one point per line as space-separated num/den rationals.
// Line files: one `a b c` integer triple per line, for the line ax + by = c.

#include <iosfwd>
#include <string>
#include <vector>

#include "drlab/pointset.hpp"

namespace drlab {

PointSet read_pointset(std::istream& in);
PointSet read_pointset_file(const std::string& path);
void write_pointset(std::ostream& out, const PointSet& ps);
void write_pointset_file(const std::string& path, const PointSet& ps);

struct LineCoeffs {
  Int a, b, c;
};

std::vector<LineCoeffs> read_lines_file(const std::string& path);
void write_lines_file(const std::string& path, const std::vector<LineCoeffs>& lines);

}  // namespace drlab
