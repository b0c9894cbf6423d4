#pragma once

#include "bench.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "induced_matching.hpp"
#include "instance_io.hpp"
#include "list_coloring.hpp"
#include "lists.hpp"
#include "mwis.hpp"
#include "path_space.hpp"
#include "vertex_set.hpp"
