#ifndef DISMANTLE_DISMANTLE_HPP
#define DISMANTLE_DISMANTLE_HPP

#include "dismantle/certificate.hpp"
#include "dismantle/complex.hpp"
#include "dismantle/complex_core.hpp"
#include "dismantle/error.hpp"
#include "dismantle/functors.hpp"
#include "dismantle/graph.hpp"
#include "dismantle/graph_core.hpp"
#include "dismantle/hom_complex.hpp"
#include "dismantle/hom_graph.hpp"
#include "dismantle/io.hpp"
#include "dismantle/isomorphism.hpp"
#include "dismantle/label.hpp"
#include "dismantle/poset.hpp"
#include "dismantle/poset_core.hpp"

#endif  // DISMANTLE_DISMANTLE_HPP
