#pragma once

#include "satgb/bench.hpp"
#include "satgb/engine.hpp"
#include "satgb/error.hpp"
#include "satgb/field.hpp"
#include "satgb/free_module.hpp"
#include "satgb/grading.hpp"
#include "satgb/homogenization.hpp"
#include "satgb/order.hpp"
#include "satgb/power_product.hpp"
#include "satgb/problem.hpp"
#include "satgb/ring.hpp"
#include "satgb/strategy.hpp"
#include "satgb/sugar.hpp"
