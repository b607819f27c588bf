#pragma once

#include "lambdadelta/arity.hpp"
#include "lambdadelta/checker.hpp"
#include "lambdadelta/debruijn.hpp"
#include "lambdadelta/environment.hpp"
#include "lambdadelta/errors.hpp"
#include "lambdadelta/eta.hpp"
#include "lambdadelta/normalization.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"
#include "lambdadelta/text.hpp"
