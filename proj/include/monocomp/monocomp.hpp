#pragma once

#include "monocomp/bounds.hpp"
#include "monocomp/coloring.hpp"
#include "monocomp/components.hpp"
#include "monocomp/constructions.hpp"
#include "monocomp/finite_field.hpp"
#include "monocomp/quadratic.hpp"
#include "monocomp/rational.hpp"
#include "monocomp/search.hpp"
#include "monocomp/simplex.hpp"
#include "monocomp/structure.hpp"
