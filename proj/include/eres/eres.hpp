#pragma once

#include "eres/core.hpp"
#include "eres/parser.hpp"
#include "eres/argprog.hpp"
#include "eres/engine.hpp"
#include "eres/oracle.hpp"
