// paradox/paradox.hpp -- umbrella header pulling in the whole library.
#pragma once

#include "graph.hpp"
#include "math_util.hpp"
#include "metrics.hpp"
#include "null_models.hpp"
#include "perception.hpp"
#include "polling.hpp"
#include "predictor.hpp"
#include "report.hpp"
#include "structure.hpp"
