#pragma once

#include "hypertree/canonical.hpp"
#include "hypertree/constructors.hpp"
#include "hypertree/enumeration.hpp"
#include "hypertree/error.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/io.hpp"
#include "hypertree/spectral.hpp"
#include "hypertree/tensor.hpp"
#include "hypertree/transforms.hpp"
#include "hypertree/tree.hpp"
