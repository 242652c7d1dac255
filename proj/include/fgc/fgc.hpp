// Convenience include for the whole library.

#pragma once

#include "fgc/endomorphism.hpp"
#include "fgc/fuzz.hpp"
#include "fgc/hnn.hpp"
#include "fgc/parse.hpp"
#include "fgc/random.hpp"
#include "fgc/relations.hpp"
#include "fgc/serialize.hpp"
#include "fgc/unitriangular.hpp"
#include "fgc/word.hpp"
