#pragma once

#include "gears/error.hpp"
#include "gears/graph.hpp"
#include "gears/io.hpp"
#include "gears/linalg.hpp"
#include "gears/markov.hpp"
#include "gears/quantum.hpp"
#include "gears/rational.hpp"
#include "gears/report.hpp"
#include "gears/transplant.hpp"
#include "gears/zeta.hpp"
