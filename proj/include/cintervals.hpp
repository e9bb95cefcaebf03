#pragma once

#include "cintervals/bench.hpp"
#include "cintervals/check.hpp"
#include "cintervals/core_model.hpp"
#include "cintervals/counters.hpp"
#include "cintervals/domination.hpp"
#include "cintervals/guided_search.hpp"
#include "cintervals/interval_union_find.hpp"
#include "cintervals/io.hpp"
#include "cintervals/order_stream.hpp"
#include "cintervals/oracle.hpp"
#include "cintervals/pipeline.hpp"
#include "cintervals/rmq.hpp"
