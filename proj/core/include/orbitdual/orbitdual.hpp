#pragma once

// Umbrella header for the whole core library.

#include "orbitdual/checker.hpp"
#include "orbitdual/duality.hpp"
#include "orbitdual/enumerate.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/induction.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/lattice.hpp"
#include "orbitdual/levi.hpp"
#include "orbitdual/lie_type.hpp"
#include "orbitdual/linalg.hpp"
#include "orbitdual/partition.hpp"
#include "orbitdual/partition_oracle.hpp"
#include "orbitdual/rational.hpp"
#include "orbitdual/root_system.hpp"
