#pragma once

#include "crossfam/construct.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/family.hpp"
#include "crossfam/gf2.hpp"
#include "crossfam/json_io.hpp"
#include "crossfam/search.hpp"
#include "crossfam/structure.hpp"
#include "crossfam/util.hpp"
