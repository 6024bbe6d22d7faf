#pragma once

#include "ore/conjugacy.hpp"
#include "ore/div_matrix.hpp"
#include "ore/duo.hpp"
#include "ore/errors.hpp"
#include "ore/expression.hpp"
#include "ore/fp_linear.hpp"
#include "ore/ring.hpp"
#include "ore/rings/galois_field.hpp"
#include "ore/rings/integers_mod.hpp"
#include "ore/rings/matrix_ring.hpp"
#include "ore/rings/qpoly.hpp"
#include "ore/rings/quaternions.hpp"
#include "ore/rings/rational_functions.hpp"
#include "ore/rings/rationals.hpp"
#include "ore/rings/triangular.hpp"
#include "ore/scalar.hpp"
#include "ore/skew_poly.hpp"
#include "ore/symmetric.hpp"
#include "ore/vandermonde.hpp"
#include "ore/wpoly.hpp"
