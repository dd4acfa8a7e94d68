#pragma once

// Core library: everything except JSON I/O (majorana/io.hpp), which needs nlohmann/json.

#include "majorana/catalog.hpp"
#include "majorana/entanglement.hpp"
#include "majorana/plot.hpp"
#include "majorana/roots.hpp"
#include "majorana/slocc.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/symstate.hpp"
#include "majorana/twirl.hpp"
