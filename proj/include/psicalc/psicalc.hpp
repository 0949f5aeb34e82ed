#pragma once

// Umbrella header for the deformed finite operator calculus library:
// exact rational scalars, truncated polynomial spaces, deformed
// derivatives and their duals, delta-operator series, basic polynomial
// sequences, universal operator expansions, the star product, deformed
// special functions, and the matching integral families.

#include "psicalc/bi_series.hpp"
#include "psicalc/delta_series.hpp"
#include "psicalc/error.hpp"
#include "psicalc/expansion.hpp"
#include "psicalc/integration.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"
#include "psicalc/special_functions.hpp"
#include "psicalc/star_product.hpp"
#include "psicalc/umbral.hpp"
