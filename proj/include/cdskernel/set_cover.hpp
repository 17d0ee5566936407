#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdskernel {

// (U, F, k): universe {0..universe_size-1}, list of families, budget k.
struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> families;
  int k = 0;
};

// File format: first line "|U| |F| k", then one line per family listing the
// covered element ids.
SetCoverInstance read_set_cover(std::istream& in);
void write_set_cover(std::ostream& out, const SetCoverInstance& sc);
SetCoverInstance read_set_cover_file(const std::string& path);

}  // namespace cdskernel
