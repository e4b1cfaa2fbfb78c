#pragma once

// Umbrella header: exact tools for hypersurfaces in weighted projective
// spaces — quasismoothness, graded automorphism groups, the (C*) condition,
// section/Newton polytopes and torus stability, A-matrices and the open
// discriminant stratum.

#include "wps/aut_group.hpp"
#include "wps/cstar.hpp"
#include "wps/errors.hpp"
#include "wps/groebner.hpp"
#include "wps/linalg.hpp"
#include "wps/monomial.hpp"
#include "wps/parser.hpp"
#include "wps/polynomial.hpp"
#include "wps/polytope.hpp"
#include "wps/quasismooth.hpp"
#include "wps/rational.hpp"
#include "wps/sampling.hpp"
#include "wps/simplex.hpp"
#include "wps/stability.hpp"
#include "wps/svg.hpp"
#include "wps/weighted_space.hpp"
