#pragma once

#include "kfaces/core_arith.hpp"
#include "kfaces/gtheorem.hpp"
#include "kfaces/macaulay.hpp"
#include "kfaces/modulus.hpp"
#include "kfaces/pascal_mod.hpp"
#include "kfaces/realizability.hpp"
