#pragma once

#include "desargues/error.hpp"
#include "desargues/field.hpp"
#include "desargues/projline.hpp"
#include "desargues/involution.hpp"
#include "desargues/ordering.hpp"
#include "desargues/plane.hpp"
#include "desargues/euclid.hpp"
#include "desargues/random.hpp"
#include "desargues/properties.hpp"
#include "desargues/dsl/script.hpp"
#include "desargues/dsl/run.hpp"
#include "desargues/dsl/render.hpp"
