#ifndef SDCLIQUE_SDCLIQUE_HPP
#define SDCLIQUE_SDCLIQUE_HPP

#include "graph.hpp"
#include "rng.hpp"
#include "polytope.hpp"
#include "model.hpp"
#include "stepsize.hpp"
#include "solver_common.hpp"
#include "fdfw.hpp"
#include "fwdc.hpp"
#include "driver.hpp"

#endif // SDCLIQUE_SDCLIQUE_HPP
