#pragma once

#include "lrc/bounds.hpp"
#include "lrc/characterize.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/field.hpp"
#include "lrc/io.hpp"
#include "lrc/linearized.hpp"
#include "lrc/matrix.hpp"
#include "lrc/repair.hpp"
#include "lrc/report.hpp"
#include "lrc/verifier.hpp"
