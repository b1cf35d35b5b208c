#pragma once

#include "syzolve/bipoly.hpp"
#include "syzolve/errors.hpp"
#include "syzolve/fft.hpp"
#include "syzolve/field.hpp"
#include "syzolve/instance.hpp"
#include "syzolve/laurent.hpp"
#include "syzolve/linalg.hpp"
#include "syzolve/poly.hpp"
#include "syzolve/polydiv.hpp"
#include "syzolve/solver.hpp"
#include "syzolve/syzygy.hpp"
#include "syzolve/tbt.hpp"
#include "syzolve/toeplitz.hpp"
