#pragma once

#include "dyngraph/arena.hpp"
#include "dyngraph/bits.hpp"
#include "dyngraph/block_pool.hpp"
#include "dyngraph/cbt.hpp"
#include "dyngraph/csr.hpp"
#include "dyngraph/edge_block.hpp"
#include "dyngraph/graph.hpp"
#include "dyngraph/io/batching.hpp"
#include "dyngraph/io/loaders.hpp"
#include "dyngraph/io/synthetic.hpp"
#include "dyngraph/io/workload.hpp"
#include "dyngraph/oracle.hpp"
#include "dyngraph/types.hpp"
#include "dyngraph/verify.hpp"
#include "dyngraph/vertex_dictionary.hpp"
