#pragma once

#include "effhom/coefficient.hpp"
#include "effhom/complex.hpp"
#include "effhom/cone.hpp"
#include "effhom/element.hpp"
#include "effhom/element_io.hpp"
#include "effhom/errors.hpp"
#include "effhom/homology.hpp"
#include "effhom/instances.hpp"
#include "effhom/law_report.hpp"
#include "effhom/module.hpp"
#include "effhom/morphism.hpp"
#include "effhom/reduction.hpp"
#include "effhom/sampler.hpp"
#include "effhom/smith.hpp"
