#pragma once

#include "pbtd/design.hpp"
#include "pbtd/error.hpp"
#include "pbtd/fixtures.hpp"
#include "pbtd/grid.hpp"
#include "pbtd/io.hpp"
#include "pbtd/orbit_template.hpp"
#include "pbtd/pair.hpp"
#include "pbtd/permutation.hpp"
#include "pbtd/search.hpp"
#include "pbtd/symmetry.hpp"
#include "pbtd/verifier.hpp"
