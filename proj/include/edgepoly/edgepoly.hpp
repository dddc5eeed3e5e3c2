#pragma once

#include "edgepoly/components.hpp"
#include "edgepoly/edge_list.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/facets.hpp"
#include "edgepoly/generators.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/neighborly.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/parallel.hpp"
#include "edgepoly/polyskeleton.hpp"
#include "edgepoly/randexp.hpp"
#include "edgepoly/random.hpp"
#include "edgepoly/subgraph_counts.hpp"
#include "edgepoly/version.hpp"
#include "edgepoly/vertex_set.hpp"
#include "edgepoly/walks.hpp"
#include "edgepoly/windmill.hpp"
