#pragma once

#include "cover_dp.hpp"
#include "exact.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "reachability.hpp"
#include "temporal.hpp"
#include "tree_decomposition.hpp"
#include "tree_solvers.hpp"
#include "weakly_chordal.hpp"
