#pragma once

// Umbrella header: exact generalized inverses of matrices over Q(x) plus the
// float backend for constant matrices.

#include "ratginv/bench.hpp"
#include "ratginv/errors.hpp"
#include "ratginv/exact_linalg.hpp"
#include "ratginv/float_linalg.hpp"
#include "ratginv/ginv.hpp"
#include "ratginv/matrix.hpp"
#include "ratginv/parse.hpp"
#include "ratginv/polynomial.hpp"
#include "ratginv/print.hpp"
#include "ratginv/psd_factor.hpp"
#include "ratginv/rational.hpp"
#include "ratginv/rational_function.hpp"
#include "ratginv/testmat.hpp"
