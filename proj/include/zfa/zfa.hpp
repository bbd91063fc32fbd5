#pragma once

// Umbrella header: a desk-scale workbench for sets with atoms. Finite atom
// pools, permutations and their group variants, hereditarily finite
// elements with the pointwise action, supports and freshness, a first-order
// language with a model checker and axiom auditor, and the tagged pure-set
// construction with its membership isomorphism.

#include "zfa/atoms.hpp"
#include "zfa/axiom_audit.hpp"
#include "zfa/ast.hpp"
#include "zfa/element.hpp"
#include "zfa/equivariance.hpp"
#include "zfa/errors.hpp"
#include "zfa/group_spec.hpp"
#include "zfa/parser.hpp"
#include "zfa/perm.hpp"
#include "zfa/printer.hpp"
#include "zfa/semantics.hpp"
#include "zfa/support.hpp"
#include "zfa/tagged_model.hpp"
#include "zfa/universe.hpp"
