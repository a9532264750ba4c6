#pragma once

#include "llyconn/assignment.hpp"
#include "llyconn/connectivity.hpp"
#include "llyconn/curvature.hpp"
#include "llyconn/families.hpp"
#include "llyconn/graph.hpp"
#include "llyconn/io.hpp"
#include "llyconn/matching.hpp"
#include "llyconn/rational.hpp"
#include "llyconn/theorems.hpp"
#include "llyconn/transport.hpp"
