#pragma once

#include "bounds.hpp"
#include "canonical.hpp"
#include "constructions.hpp"
#include "generation.hpp"
#include "graph.hpp"
#include "paths.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "triangles.hpp"
#include "version.hpp"
