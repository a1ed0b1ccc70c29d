#pragma once

#include "jackson/errors.hpp"
#include "jackson/rational.hpp"
#include "jackson/cyclotomic.hpp"
#include "jackson/finite_field.hpp"
#include "jackson/prime_context.hpp"
#include "jackson/presentation.hpp"
#include "jackson/rewriting.hpp"
#include "jackson/families.hpp"
#include "jackson/hom_lie.hpp"
#include "jackson/specialize.hpp"
#include "jackson/locus.hpp"
#include "jackson/ext.hpp"
#include "jackson/kodaira.hpp"
#include "jackson/reduction.hpp"
#include "jackson/elliptic.hpp"
#include "jackson/expr.hpp"
#include "jackson/io.hpp"
