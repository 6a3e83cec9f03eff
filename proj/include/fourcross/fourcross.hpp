// Umbrella header.
#pragma once

#include "fourcross/bench.hpp"
#include "fourcross/decide.hpp"
#include "fourcross/generate.hpp"
#include "fourcross/geometry.hpp"
#include "fourcross/io.hpp"
#include "fourcross/oracle.hpp"
#include "fourcross/rational.hpp"
#include "fourcross/reductions.hpp"
#include "fourcross/svg.hpp"
