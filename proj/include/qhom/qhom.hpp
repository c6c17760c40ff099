#pragma once

#include "qhom/algebra.hpp"
#include "qhom/bounds.hpp"
#include "qhom/constructions.hpp"
#include "qhom/corpus.hpp"
#include "qhom/field.hpp"
#include "qhom/io.hpp"
#include "qhom/matrix.hpp"
#include "qhom/quiver.hpp"
#include "qhom/rep.hpp"
#include "qhom/resolution.hpp"
#include "qhom/torsion.hpp"
