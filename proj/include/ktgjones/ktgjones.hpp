#pragma once

#include "ktgjones/errors.hpp"
#include "ktgjones/exactring.hpp"
#include "ktgjones/qblocks.hpp"
#include "ktgjones/params.hpp"
#include "ktgjones/ktgcalc.hpp"
#include "ktgjones/evaluator.hpp"
#include "ktgjones/analysis.hpp"
#include "ktgjones/serialize.hpp"
