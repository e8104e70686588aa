#include "vand/node_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vand {

void write_node_file(const std::string& path, const NodeSet& ns) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_node_file: cannot open " + path);
  out << "# d=" << ns.d << " n=" << ns.n << "\n";
  char buf[40];
  const long M = ns.size();
  for (long j = 0; j < M; ++j) {
    for (int l = 0; l < ns.d; ++l) {
      std::snprintf(buf, sizeof(buf), "%.17g", ns.node(j)[l]);
      out << (l ? " " : "") << buf;
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write_node_file: write failed for " + path);
}

NodeSet read_node_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_node_file: cannot open " + path);
  int d = 0;
  long n = 0;
  bool have_header = false;
  std::vector<double> coords;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    if (!have_header) {
      char hash = 0;
      std::string dkey, nkey;
      ss >> hash >> dkey >> nkey;
      if (hash != '#' || std::sscanf(dkey.c_str(), "d=%d", &d) != 1 ||
          std::sscanf(nkey.c_str(), "n=%ld", &n) != 1)
        throw std::runtime_error("read_node_file: missing `# d=<d> n=<n>` header in " + path);
      have_header = true;
      continue;
    }
    std::string first;
    if (!(ss >> first)) continue;        // blank line
    if (first[0] == '#') continue;       // comment
    ss.clear();
    ss.str(line);
    for (int l = 0; l < d; ++l) {
      double x;
      if (!(ss >> x))
        throw std::runtime_error("read_node_file: expected " + std::to_string(d) +
                                 " coordinates on line " + std::to_string(lineno));
      coords.push_back(x);
    }
    std::string rest;
    if (ss >> rest)
      throw std::runtime_error("read_node_file: trailing token on line " +
                               std::to_string(lineno));
  }
  if (!have_header) throw std::runtime_error("read_node_file: empty file " + path);
  return make_node_set(d, n, std::move(coords));
}

}  // namespace vand
