#pragma once

#include "polytri/arith.hpp"
#include "polytri/baselines.hpp"
#include "polytri/bench.hpp"
#include "polytri/bridges.hpp"
#include "polytri/bst_solver.hpp"
#include "polytri/core.hpp"
#include "polytri/expansion.hpp"
#include "polytri/generators.hpp"
#include "polytri/heuristic.hpp"
#include "polytri/matrix_chain.hpp"
#include "polytri/memo.hpp"
#include "polytri/yao_solver.hpp"
