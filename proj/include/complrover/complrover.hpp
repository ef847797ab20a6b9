#pragma once

// Umbrella header for the complrover library.

#include "complrover/classify.hpp"
#include "complrover/cli.hpp"
#include "complrover/completeness.hpp"
#include "complrover/errors.hpp"
#include "complrover/eval.hpp"
#include "complrover/oracle.hpp"
#include "complrover/parse.hpp"
#include "complrover/query.hpp"
#include "complrover/rdf.hpp"
#include "complrover/report.hpp"
#include "complrover/serialize.hpp"
