#pragma once

#include "model.hpp"
#include "visibility.hpp"
#include "quasiplanar.hpp"
#include "transform.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "svg.hpp"
#include "verify.hpp"
