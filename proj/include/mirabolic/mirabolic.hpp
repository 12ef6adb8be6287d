#pragma once

// Exact combinatorial calculus of derivatives for representations of the
// general linear groups: partitions and nilpotent orbits, the unitary
// catalogue and its adduced representations, Whittaker-type dimension
// bookkeeping, exact matrix verifiers, a bigraded PBW layer and
// filtration comparison tools.

#include "mirabolic/bigrading.hpp"
#include "mirabolic/derivatives.hpp"
#include "mirabolic/enveloping.hpp"
#include "mirabolic/errors.hpp"
#include "mirabolic/filtration.hpp"
#include "mirabolic/gaussian.hpp"
#include "mirabolic/matrix.hpp"
#include "mirabolic/matrixlab.hpp"
#include "mirabolic/partition.hpp"
#include "mirabolic/rational.hpp"
#include "mirabolic/report.hpp"
#include "mirabolic/reps.hpp"
#include "mirabolic/reps_grammar.hpp"
