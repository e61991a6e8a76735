#ifndef MCSDAG_MCSDAG_HPP
#define MCSDAG_MCSDAG_HPP

#include "mcsdag/builder.hpp"
#include "mcsdag/mdag.hpp"
#include "mcsdag/mdag_io.hpp"
#include "mcsdag/occurrence_index.hpp"
#include "mcsdag/oracle.hpp"
#include "mcsdag/query.hpp"
#include "mcsdag/swings.hpp"

#endif
