#pragma once

#include "rainbow/dense.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/thresholds.hpp"
#include "rainbow/verify.hpp"
