#pragma once

#include "countlab/bigint.hpp"
#include "countlab/graph.hpp"
#include "countlab/treewidth.hpp"

namespace countlab {

// Counts Hom(pattern -> host) by dynamic programming over a nice form of the
// given tree decomposition, with tables indexed by bag assignments. Agrees
// with count_hom on every input; runs in |host|^{width+1} per node. The
// decomposition is validated first.
BigCount count_hom_td(const Graph& pattern, const TreeDecomposition& td, const Graph& host,
                      unsigned long long table_guard = 1ull << 25);

} // namespace countlab
