#pragma once

#include "canonical.hpp"
#include "cluster.hpp"
#include "counting.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "report.hpp"
#include "threshold.hpp"
#include "verify.hpp"
#include "vertex_set.hpp"
