// Umbrella header.
#pragma once

#include "mapr/apportionment.hpp"
#include "mapr/axioms.hpp"
#include "mapr/buckets.hpp"
#include "mapr/errors.hpp"
#include "mapr/generators.hpp"
#include "mapr/io.hpp"
#include "mapr/local_search.hpp"
#include "mapr/model.hpp"
#include "mapr/random.hpp"
#include "mapr/rational.hpp"
#include "mapr/scaled_loss.hpp"
#include "mapr/solvers.hpp"
#include "mapr/transform.hpp"
