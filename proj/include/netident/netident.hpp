#ifndef NETIDENT_NETIDENT_HPP
#define NETIDENT_NETIDENT_HPP

#include "netident/combinatorial.hpp"
#include "netident/errors.hpp"
#include "netident/field.hpp"
#include "netident/generate.hpp"
#include "netident/identifiability.hpp"
#include "netident/io.hpp"
#include "netident/matrix.hpp"
#include "netident/monomial.hpp"
#include "netident/netmodel.hpp"
#include "netident/numeric.hpp"
#include "netident/oracle.hpp"
#include "netident/report.hpp"
#include "netident/rng.hpp"
#include "netident/verdict.hpp"
#include "netident/walks.hpp"

#endif
