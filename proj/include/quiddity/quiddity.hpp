#pragma once

#include "quiddity/error.hpp"
#include "quiddity/ring.hpp"
#include "quiddity/mat2.hpp"
#include "quiddity/cycle.hpp"
#include "quiddity/frieze.hpp"
#include "quiddity/transforms.hpp"
#include "quiddity/bounds.hpp"
#include "quiddity/reduction.hpp"
#include "quiddity/triangulation.hpp"
#include "quiddity/labelling.hpp"
#include "quiddity/clusters.hpp"
#include "quiddity/enumeration.hpp"
#include "quiddity/json_io.hpp"
