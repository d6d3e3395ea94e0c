#pragma once

#include "seidel/binomial.hpp"
#include "seidel/identities.hpp"
#include "seidel/integer.hpp"
#include "seidel/json_io.hpp"
#include "seidel/polynomial.hpp"
#include "seidel/presets.hpp"
#include "seidel/rational.hpp"
#include "seidel/report.hpp"
#include "seidel/sequences.hpp"
#include "seidel/series.hpp"
#include "seidel/tableau.hpp"
