#pragma once

#include "chebpow/chebyshev.hpp"
#include "chebpow/dense_matrix.hpp"
#include "chebpow/errors.hpp"
#include "chebpow/families.hpp"
#include "chebpow/fibpoly.hpp"
#include "chebpow/kernels.hpp"
#include "chebpow/powers.hpp"
#include "chebpow/spectral.hpp"
