#pragma once

#include "clutter.hpp"
#include "cone.hpp"
#include "core.hpp"
#include "decision.hpp"
#include "exponent_matrix.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "report.hpp"
#include "set_covering.hpp"
#include "smith.hpp"
