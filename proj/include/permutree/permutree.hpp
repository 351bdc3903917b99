#pragma once

// Umbrella header for the delta-permutree calculus.

#include "permutree/conformance.hpp"
#include "permutree/decoration.hpp"
#include "permutree/geometry.hpp"
#include "permutree/io.hpp"
#include "permutree/oracle.hpp"
#include "permutree/order.hpp"
#include "permutree/pairset.hpp"
#include "permutree/tree.hpp"
#include "permutree/vectors.hpp"
