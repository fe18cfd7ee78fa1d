#pragma once

#include "umprox/bounds.hpp"
#include "umprox/feasible_set.hpp"
#include "umprox/gap.hpp"
#include "umprox/operator.hpp"
#include "umprox/problem_io.hpp"
#include "umprox/problems.hpp"
#include "umprox/prox.hpp"
#include "umprox/stochastic_ump.hpp"
#include "umprox/types.hpp"
#include "umprox/ump.hpp"
