#pragma once

#include "ccenum/compact_graph.hpp"
#include "ccenum/cycle_set.hpp"
#include "ccenum/errors.hpp"
#include "ccenum/labeling.hpp"
#include "ccenum/oracle.hpp"
#include "ccenum/parallel.hpp"
#include "ccenum/sequential.hpp"
