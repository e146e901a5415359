#pragma once

// Umbrella header for the whole library.

#include "farey/closed_form.hpp"
#include "farey/coverings.hpp"
#include "farey/farey_map.hpp"
#include "farey/graph.hpp"
#include "farey/hecke.hpp"
#include "farey/jacobi.hpp"
#include "farey/modular.hpp"
#include "farey/psl2.hpp"
#include "farey/spectrum.hpp"
#include "farey/surd.hpp"
#include "farey/verdict.hpp"
