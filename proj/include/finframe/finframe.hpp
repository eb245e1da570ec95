#pragma once

#include "finframe/bench.hpp"
#include "finframe/classification.hpp"
#include "finframe/errors.hpp"
#include "finframe/frame.hpp"
#include "finframe/io.hpp"
#include "finframe/numerics.hpp"
#include "finframe/plot.hpp"
#include "finframe/random.hpp"
#include "finframe/transform.hpp"
