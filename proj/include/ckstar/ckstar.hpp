#pragma once

/* Umbrella header for the ckstar library. */

#include "ckstar/scalar.hpp"
#include "ckstar/zero_one_matrix.hpp"
#include "ckstar/int_matrix.hpp"
#include "ckstar/star_algebra.hpp"
#include "ckstar/bialgebra.hpp"
#include "ckstar/permutative.hpp"
#include "ckstar/subshift.hpp"
#include "ckstar/expr_parser.hpp"
#include "ckstar/matrix_io.hpp"
