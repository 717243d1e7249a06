#ifndef VRTREE_VRTREE_HPP
#define VRTREE_VRTREE_HPP

#include "vrtree/bench.hpp"
#include "vrtree/combinatorics.hpp"
#include "vrtree/construction.hpp"
#include "vrtree/counters.hpp"
#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"
#include "vrtree/io.hpp"
#include "vrtree/kernels.hpp"
#include "vrtree/parallel.hpp"
#include "vrtree/point_cloud.hpp"
#include "vrtree/simplex.hpp"
#include "vrtree/simplex_tree.hpp"
#include "vrtree/verify.hpp"

#endif
