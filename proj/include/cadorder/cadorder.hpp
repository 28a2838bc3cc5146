#pragma once

#include "cadorder/error.hpp"
#include "cadorder/heuristics.hpp"
#include "cadorder/ordering.hpp"
#include "cadorder/parser.hpp"
#include "cadorder/polynomial.hpp"
#include "cadorder/projection.hpp"
#include "cadorder/real_roots.hpp"
#include "cadorder/resultant.hpp"
#include "cadorder/stats.hpp"
#include "cadorder/univariate.hpp"
