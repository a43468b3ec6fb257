#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uberhom/graph.hpp"

namespace uberhom::cli {

struct TableRow {
  std::string name;
  // Several graphs for family rows such as "C_n, n = 3..9".
  std::vector<std::pair<std::string, std::function<Graph()>>> graphs;
  // Expected ranks by degree for each graph, and the expected Euler characteristic.
  std::function<std::map<int, std::size_t>(const Graph&)> expected;
  std::function<long long(const Graph&)> expected_chi;
};

std::vector<TableRow> reference_rows();

// Rows listed with unknown homology; never computed.
std::vector<std::pair<std::string, std::string>> reference_skipped();

}  // namespace uberhom::cli
