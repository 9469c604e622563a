/// Umbrella header.
#pragma once

#include "aom/bounded_complex.hpp"
#include "aom/collapse.hpp"
#include "aom/error.hpp"
#include "aom/feasibility.hpp"
#include "aom/homology.hpp"
#include "aom/io.hpp"
#include "aom/local_structure.hpp"
#include "aom/manifold.hpp"
#include "aom/oriented_matroid.hpp"
#include "aom/poset.hpp"
#include "aom/realization.hpp"
#include "aom/shelling.hpp"
#include "aom/signvec.hpp"
#include "aom/simplicial.hpp"
#include "aom/svg.hpp"
#include "aom/verify.hpp"
