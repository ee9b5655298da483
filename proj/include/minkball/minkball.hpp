#pragma once

#include "minkball/gauge.hpp"
#include "minkball/oracle.hpp"
#include "minkball/scene.hpp"
#include "minkball/scene_io.hpp"
#include "minkball/sets.hpp"
#include "minkball/solver.hpp"
#include "minkball/timefn.hpp"
#include "minkball/vec.hpp"
