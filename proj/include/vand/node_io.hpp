#pragma once

#include <string>

#include "vand/types.hpp"

namespace vand {

// Text format: a header line `# d=<d> n=<n>`, then one node per line as d
// whitespace-separated decimal coordinates.  Extra blank or comment lines are
// ignored on read.
void write_node_file(const std::string& path, const NodeSet& ns);
NodeSet read_node_file(const std::string& path);

}  // namespace vand
