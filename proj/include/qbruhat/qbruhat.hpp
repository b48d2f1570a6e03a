#pragma once

#include "cells.hpp"
#include "errors.hpp"
#include "factorize.hpp"
#include "gauss.hpp"
#include "identities.hpp"
#include "matrix.hpp"
#include "matrix_io.hpp"
#include "quasidet.hpp"
#include "quaternion.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "weyl.hpp"
