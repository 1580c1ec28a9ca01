#pragma once

// Umbrella header.

#include "pafp/decomposition.hpp"
#include "pafp/digraph.hpp"
#include "pafp/errors.hpp"
#include "pafp/generators.hpp"
#include "pafp/instance.hpp"
#include "pafp/instance_io.hpp"
#include "pafp/layering.hpp"
#include "pafp/normalize.hpp"
#include "pafp/oracle.hpp"
#include "pafp/rng.hpp"
#include "pafp/solver_bfsw2k.hpp"
#include "pafp/solver_elw2.hpp"
#include "pafp/twosat.hpp"
