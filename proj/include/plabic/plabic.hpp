#pragma once

#include "plabic/error.hpp"
#include "plabic/rational.hpp"
#include "plabic/subset.hpp"
#include "plabic/positroid.hpp"
#include "plabic/graph.hpp"
#include "plabic/orientation.hpp"
#include "plabic/strands.hpp"
#include "plabic/bridge.hpp"
#include "plabic/refine.hpp"
#include "plabic/moves.hpp"
#include "plabic/weak_separation.hpp"
#include "plabic/measurement.hpp"
#include "plabic/geometry.hpp"
#include "plabic/baues.hpp"
#include "plabic/json_io.hpp"
#include "plabic/render.hpp"
