#pragma once

#include "sdf/sampling/coupling.hpp"
#include "sdf/sampling/philox.hpp"
#include "sdf/sampling/seeded_rng.hpp"
#include "sdf/sampling/variates.hpp"
