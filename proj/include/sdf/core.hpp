#pragma once

#include "sdf/core/cell_probabilities.hpp"
#include "sdf/core/distances.hpp"
#include "sdf/core/errors.hpp"
#include "sdf/core/estimators.hpp"
#include "sdf/core/grouping.hpp"
#include "sdf/core/kernel.hpp"
#include "sdf/core/moments.hpp"
#include "sdf/core/population.hpp"
#include "sdf/core/step_cdf.hpp"
#include "sdf/core/step_density.hpp"
#include "sdf/core/types.hpp"
