#pragma once

#include "hhv/exact.hpp"
#include "hhv/inequalities.hpp"
#include "hhv/interval.hpp"
#include "hhv/params.hpp"
#include "hhv/sequence.hpp"
#include "hhv/summation.hpp"
#include "hhv/weights.hpp"
#include "hhv/zeta.hpp"
