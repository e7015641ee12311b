#pragma once

#include "polyban/colimits.hpp"
#include "polyban/errors.hpp"
#include "polyban/geometry.hpp"
#include "polyban/injectivity.hpp"
#include "polyban/io.hpp"
#include "polyban/linear_map.hpp"
#include "polyban/logic.hpp"
#include "polyban/lp.hpp"
#include "polyban/matrix.hpp"
#include "polyban/purity.hpp"
#include "polyban/rational.hpp"
#include "polyban/space.hpp"
