#pragma once

// Umbrella header.
#include "hypereuler/rational.hpp"
#include "hypereuler/errors.hpp"
#include "hypereuler/exact_arith.hpp"
#include "hypereuler/coeff_engine.hpp"
#include "hypereuler/hyperharmonic.hpp"
#include "hypereuler/eulersum_algebra.hpp"
#include "hypereuler/decomposer.hpp"
#include "hypereuler/bigfloat.hpp"
#include "hypereuler/numerics.hpp"
#include "hypereuler/conjecture_lab.hpp"
#include "hypereuler/serialize.hpp"
