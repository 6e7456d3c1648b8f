#pragma once

// Combinatorics of Grassmannian Schubert varieties and of the open
// Richardson varieties attached to skew shapes: singular locus formulas,
// cell posets, isomorphism deciders, and exhaustive small-scale
// verification sweeps for the identities the deciders rest on.

#include "cell.hpp"
#include "cell_poset.hpp"
#include "count.hpp"
#include "deciders.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "qbinomial.hpp"
#include "render.hpp"
#include "singular_locus.hpp"
#include "skew_shape.hpp"
#include "verify.hpp"
