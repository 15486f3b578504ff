#pragma once

#include "fullerene/codec.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/metrics.hpp"
#include "fullerene/spiral.hpp"
#include "fullerene/survey.hpp"
#include "fullerene/version.hpp"
