#pragma once

#include "bayesreg/distributions.hpp"
#include "bayesreg/error.hpp"
#include "bayesreg/model_core.hpp"
#include "bayesreg/parallel.hpp"
#include "bayesreg/priors.hpp"
#include "bayesreg/quadrature.hpp"
#include "bayesreg/risk_lab.hpp"
#include "bayesreg/rng.hpp"
#include "bayesreg/samplers.hpp"
#include "bayesreg/summary.hpp"
#include "bayesreg/version.hpp"
