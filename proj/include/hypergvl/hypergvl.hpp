#pragma once

#include "hypergvl/core.hpp"
#include "hypergvl/rng.hpp"
#include "hypergvl/io.hpp"
#include "hypergvl/tasks.hpp"
#include "hypergvl/solve.hpp"
#include "hypergvl/verify.hpp"
#include "hypergvl/generate.hpp"
#include "hypergvl/text_repr.hpp"
#include "hypergvl/visual_repr.hpp"
#include "hypergvl/answer.hpp"
#include "hypergvl/bench.hpp"
#include "hypergvl/grade.hpp"
