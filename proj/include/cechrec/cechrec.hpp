#pragma once

#include "cechrec/complex.hpp"
#include "cechrec/error.hpp"
#include "cechrec/generators.hpp"
#include "cechrec/homology.hpp"
#include "cechrec/io.hpp"
#include "cechrec/linalg.hpp"
#include "cechrec/maps.hpp"
#include "cechrec/metric.hpp"
#include "cechrec/miniball.hpp"
#include "cechrec/recover.hpp"
#include "cechrec/serialize.hpp"
