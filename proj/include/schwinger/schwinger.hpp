#pragma once

#include "schwinger/errors.hpp"
#include "schwinger/specfun.hpp"
#include "schwinger/fields.hpp"
#include "schwinger/bogoliubov.hpp"
#include "schwinger/entanglement.hpp"
#include "schwinger/oracle.hpp"
#include "schwinger/sweep.hpp"
#include "schwinger/io.hpp"
#include "schwinger/presets.hpp"
#include "schwinger/verify.hpp"
