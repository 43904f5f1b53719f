#pragma once

// Everything: bodies, segment tests, hidden-set certificates, capacity search,
// constructions, reductions, the simplex lab and JSON I/O.

#include "hidden/body.hpp"
#include "hidden/capacity.hpp"
#include "hidden/constructors.hpp"
#include "hidden/hidden_set.hpp"
#include "hidden/json_io.hpp"
#include "hidden/probe.hpp"
#include "hidden/reduction.hpp"
#include "hidden/simplex_lab.hpp"
