#pragma once

#include "krev/bounds.hpp"
#include "krev/canonical.hpp"
#include "krev/configuration.hpp"
#include "krev/dynamics.hpp"
#include "krev/energy.hpp"
#include "krev/error.hpp"
#include "krev/extremal.hpp"
#include "krev/free_trees.hpp"
#include "krev/graph.hpp"
#include "krev/prufer.hpp"
#include "krev/trajectory.hpp"
