#pragma once

#include "symmetry.hpp"
#include "chebyshev.hpp"
#include "numerics.hpp"
#include "rayleigh.hpp"
#include "lowest_zero.hpp"
#include "test_function.hpp"
#include "family_bounds.hpp"
#include "proportion.hpp"
