#pragma once

#include "netph/centrality.hpp"
#include "netph/clique_complex.hpp"
#include "netph/curvature.hpp"
#include "netph/diagrams.hpp"
#include "netph/errors.hpp"
#include "netph/generators.hpp"
#include "netph/graph.hpp"
#include "netph/io.hpp"
#include "netph/parallel.hpp"
#include "netph/persistence.hpp"
#include "netph/pipeline.hpp"
#include "netph/rng.hpp"
#include "netph/svg.hpp"
#include "netph/weighting.hpp"
