#ifndef MVCHROMA_MVCHROMA_HPP
#define MVCHROMA_MVCHROMA_HPP

#include "mvchroma/coloring.hpp"
#include "mvchroma/construction.hpp"
#include "mvchroma/distance.hpp"
#include "mvchroma/error.hpp"
#include "mvchroma/formula.hpp"
#include "mvchroma/geodesic.hpp"
#include "mvchroma/glued_tree.hpp"
#include "mvchroma/graph.hpp"
#include "mvchroma/graph_io.hpp"
#include "mvchroma/nae.hpp"
#include "mvchroma/reduction.hpp"
#include "mvchroma/solver.hpp"
#include "mvchroma/theorem.hpp"
#include "mvchroma/visibility.hpp"

#endif
