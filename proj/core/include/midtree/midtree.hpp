#pragma once

#include "midtree/complexity.hpp"
#include "midtree/digraph.hpp"
#include "midtree/generator.hpp"
#include "midtree/identities.hpp"
#include "midtree/matrix.hpp"
#include "midtree/oracle.hpp"
#include "midtree/polynomial.hpp"
#include "midtree/rational.hpp"
#include "midtree/transforms.hpp"
