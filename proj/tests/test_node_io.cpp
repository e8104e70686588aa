#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "testutil.hpp"
#include "vand/node_io.hpp"
#include "vand/rng.hpp"

using namespace vand;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "vand_node_io_test") {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("node files round-trip bit for bit") {
  TempDir tmp;
  SplitMix64 rng(0x10u);
  for (int rep = 0; rep < 10; ++rep) {
    const int d = 1 + (int)(rng.next() % 3);
    const long n = 7 + (long)(rng.next() % 1000);
    const long M = 1 + (long)(rng.next() % 12);
    std::vector<double> coords;
    for (long i = 0; i < M * d; ++i) coords.push_back(rng.uniform());
    NodeSet ns = make_node_set(d, n, coords);
    const std::string path = tmp.file("roundtrip.txt");
    write_node_file(path, ns);
    NodeSet back = read_node_file(path);
    CHECK(back.d == ns.d);
    CHECK(back.n == ns.n);
    REQUIRE(back.coords.size() == ns.coords.size());
    for (std::size_t i = 0; i < ns.coords.size(); ++i) CHECK(back.coords[i] == ns.coords[i]);
  }
}

TEST_CASE("reader tolerates blank lines, comments and ragged spacing") {
  TempDir tmp;
  const std::string path = tmp.file("loose.txt");
  {
    std::ofstream out(path);
    out << "#  d=2   n=63\n";
    out << "\n";
    out << "0.125\t0.25\n";
    out << "# a note\n";
    out << "   0.5     0.75   \n";
  }
  NodeSet ns = read_node_file(path);
  CHECK(ns.d == 2);
  CHECK(ns.n == 63);
  REQUIRE(ns.size() == 2);
  CHECK(ns.node(0)[0] == 0.125);
  CHECK(ns.node(1)[1] == 0.75);
}

TEST_CASE("reader rejects malformed files") {
  TempDir tmp;
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(tmp.file(name));
    out << body;
    return tmp.file(name);
  };
  CHECK_THROWS_AS(read_node_file(tmp.file("missing.txt")), std::runtime_error);
  CHECK_THROWS_AS(read_node_file(write("nohdr.txt", "0.5 0.5\n")), std::runtime_error);
  CHECK_THROWS_AS(read_node_file(write("short.txt", "# d=2 n=7\n0.5\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(read_node_file(write("long.txt", "# d=1 n=7\n0.5 0.25\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(read_node_file(write("empty.txt", "")), std::runtime_error);
  CHECK_THROWS_AS(read_node_file(write("text.txt", "# d=1 n=7\nabc\n")),
                  std::runtime_error);
}
