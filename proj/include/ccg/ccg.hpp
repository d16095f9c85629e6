#pragma once

// Convenience umbrella for the whole library.

#include "ccg/category.hpp"
#include "ccg/config.hpp"
#include "ccg/derivation.hpp"
#include "ccg/errors.hpp"
#include "ccg/generate.hpp"
#include "ccg/lexicon.hpp"
#include "ccg/oracle.hpp"
#include "ccg/parser.hpp"
#include "ccg/rewrite.hpp"
#include "ccg/rules.hpp"
#include "ccg/selfcheck.hpp"
#include "ccg/semterm.hpp"
#include "ccg/serialize.hpp"
#include "ccg/train.hpp"
#include "ccg/viability.hpp"
