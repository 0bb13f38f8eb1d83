#pragma once

#include "delta.hpp"
#include "simplicial_set.hpp"
#include "category.hpp"
#include "extension.hpp"
#include "constructions.hpp"
#include "simplex_category.hpp"
#include "marked.hpp"
#include "lifting.hpp"
#include "homology.hpp"
#include "homotopy.hpp"
#include "mapping_space.hpp"
#include "diagrams.hpp"
#include "absolute.hpp"
#include "gluing.hpp"
#include "io.hpp"
