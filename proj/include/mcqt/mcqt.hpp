#pragma once

#include "mcqt/statevector.hpp"
#include "mcqt/state_io.hpp"
#include "mcqt/tables.hpp"
#include "mcqt/protocol.hpp"
#include "mcqt/verify.hpp"
#include "mcqt/report.hpp"
