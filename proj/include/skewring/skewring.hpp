// skewring.hpp — umbrella header.

#pragma once

#include "skewring/classify.hpp"
#include "skewring/error.hpp"
#include "skewring/freering.hpp"
#include "skewring/gf.hpp"
#include "skewring/matfq.hpp"
#include "skewring/morphism.hpp"
#include "skewring/random.hpp"
#include "skewring/transform.hpp"
