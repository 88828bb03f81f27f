#pragma once

#include "sdf/experiments/csv.hpp"
#include "sdf/experiments/diagnostics.hpp"
#include "sdf/experiments/errors.hpp"
#include "sdf/experiments/output.hpp"
#include "sdf/experiments/reference.hpp"
#include "sdf/experiments/scenario.hpp"
#include "sdf/experiments/sweep.hpp"
