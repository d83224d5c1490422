#pragma once

#include "qgx/assignment.hpp"
#include "qgx/circular.hpp"
#include "qgx/combinatorics.hpp"
#include "qgx/errors.hpp"
#include "qgx/graphs.hpp"
#include "qgx/grouping.hpp"
#include "qgx/metric.hpp"
#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"
#include "qgx/sequences.hpp"
#include "qgx/symmetric.hpp"
#include "qgx/types.hpp"
