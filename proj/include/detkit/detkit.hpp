#pragma once

#include "detkit/determinant.hpp"
#include "detkit/elimination.hpp"
#include "detkit/errors.hpp"
#include "detkit/fields.hpp"
#include "detkit/functional.hpp"
#include "detkit/gfp.hpp"
#include "detkit/matrix.hpp"
#include "detkit/rational.hpp"
#include "detkit/rng.hpp"
#include "detkit/sampling.hpp"
#include "detkit/solver.hpp"
#include "detkit/subspace.hpp"
#include "detkit/vector.hpp"
