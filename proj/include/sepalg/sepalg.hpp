#pragma once

#include "sepalg/algebra.hpp"
#include "sepalg/diagram.hpp"
#include "sepalg/errors.hpp"
#include "sepalg/json_io.hpp"
#include "sepalg/matrix.hpp"
#include "sepalg/scalar.hpp"
#include "sepalg/separability.hpp"
#include "sepalg/solve.hpp"
#include "sepalg/spectrum.hpp"
