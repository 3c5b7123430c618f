#pragma once

#include "mcolor/algebraic.hpp"
#include "mcolor/combinatorics.hpp"
#include "mcolor/edge_list.hpp"
#include "mcolor/error.hpp"
#include "mcolor/finite_field.hpp"
#include "mcolor/generators.hpp"
#include "mcolor/graph.hpp"
#include "mcolor/io.hpp"
#include "mcolor/multicoloring.hpp"
#include "mcolor/neighborhood.hpp"
#include "mcolor/randomized.hpp"
#include "mcolor/rational.hpp"
#include "mcolor/rng.hpp"
#include "mcolor/shared_order.hpp"
#include "mcolor/simulator.hpp"
#include "mcolor/tdma.hpp"
#include "mcolor/verifier.hpp"
