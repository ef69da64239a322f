#pragma once

#include "schemekit/exact/linalg.hpp"
#include "schemekit/exact/matrix.hpp"
#include "schemekit/exact/polynomial.hpp"
#include "schemekit/exact/rational.hpp"
#include "schemekit/exact/real_roots.hpp"
#include "schemekit/exact/scalar.hpp"
