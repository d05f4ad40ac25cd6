#pragma once

#include "stargrundy/census.hpp"
#include "stargrundy/closed_forms.hpp"
#include "stargrundy/error.hpp"
#include "stargrundy/evaluate.hpp"
#include "stargrundy/gsequence.hpp"
#include "stargrundy/oracle.hpp"
#include "stargrundy/position.hpp"
#include "stargrundy/row_periodicity.hpp"
#include "stargrundy/two_star_nim.hpp"
#include "stargrundy/verify.hpp"
