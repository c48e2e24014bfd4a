#pragma once

// Umbrella header: maximum-subdeterminant local search, exact verification of
// the exchange-family determinant identities, and the detlb estimator.

#include "subdet/cauchy_binet.hpp"
#include "subdet/det.hpp"
#include "subdet/detlb.hpp"
#include "subdet/exchange.hpp"
#include "subdet/fixtures.hpp"
#include "subdet/gram.hpp"
#include "subdet/index_pair.hpp"
#include "subdet/matrix.hpp"
#include "subdet/neighborhood.hpp"
#include "subdet/plucker.hpp"
#include "subdet/random_gen.hpp"
#include "subdet/rational.hpp"
#include "subdet/search.hpp"
