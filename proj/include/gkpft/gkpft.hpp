#pragma once

// Fault-tolerance analysis of continuous-variable Gaussian computation with
// GKP-based error correction: exact variance bookkeeping, gate noise models,
// correction/error probabilities, squeezing thresholds, and a Monte-Carlo
// sampling oracle.

#include "gkpft/analysis.hpp"
#include "gkpft/gates.hpp"
#include "gkpft/gkp.hpp"
#include "gkpft/json_io.hpp"
#include "gkpft/ledger.hpp"
#include "gkpft/montecarlo.hpp"
#include "gkpft/quadratic_surd.hpp"
#include "gkpft/rational.hpp"
#include "gkpft/special_functions.hpp"
#include "gkpft/squeezing.hpp"
#include "gkpft/variance_vector.hpp"
