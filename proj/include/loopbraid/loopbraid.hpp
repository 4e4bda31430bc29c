#pragma once

#include "loopbraid/classifier.hpp"
#include "loopbraid/combinatorics.hpp"
#include "loopbraid/dense.hpp"
#include "loopbraid/error.hpp"
#include "loopbraid/matchcat.hpp"
#include "loopbraid/recipe.hpp"
#include "loopbraid/relations.hpp"
#include "loopbraid/scalar.hpp"
