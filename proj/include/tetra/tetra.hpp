#pragma once

#include "tetra/central_extension.hpp"
#include "tetra/expr.hpp"
#include "tetra/linalg.hpp"
#include "tetra/loop.hpp"
#include "tetra/nlrta.hpp"
#include "tetra/onsager.hpp"
#include "tetra/poly.hpp"
#include "tetra/random.hpp"
#include "tetra/rational.hpp"
#include "tetra/report.hpp"
#include "tetra/ring.hpp"
#include "tetra/s4.hpp"
#include "tetra/suites.hpp"
