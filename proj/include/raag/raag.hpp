#pragma once

// Umbrella header: graphs and their IO, the isomorphism engine, the
// outer-automorphism analysis, the realization constructions, and the
// small-graph census.

#include "raag/analysis.hpp"
#include "raag/census.hpp"
#include "raag/construction.hpp"
#include "raag/dot.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/graph6.hpp"
#include "raag/io.hpp"
#include "raag/iso.hpp"
#include "raag/sampling.hpp"
#include "raag/serialize.hpp"
